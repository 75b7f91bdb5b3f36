#pragma once

#include "rademacher/fricke_group.hpp"

namespace rademacher {

// Smallest positive even k with (p - 1) k / 24 integral; the exponent in
// Delta_p(z) = eta(z)^k eta(pz)^k.
long k_of_p(OddPrime p);

// (a, pb; c/p, d) for (a, b; c, d) in Gamma_0(p). Coset input raises
// precondition_violation.
UnimodularMatrix conjugate_by_p(const FrickeElement& e);

// The Gamma_0(p) element (gamma, delta; -p alpha, -beta) = W_p^{-1} e of a
// coset element e = (alpha, beta, gamma, delta).
UnimodularMatrix fricke_reduce(const FrickeElement& e);

// Rademacher symbol of Gamma_0^+(p):
//   Gamma_0(p):   (Phi(g) + Phi(conjugate_by_p(g))) / 2
//   Fricke coset: phi_p(fricke_reduce(e)) - 3 sgn(-alpha gamma)
// Exact rational; twice the value is always integral.
Rational phi_p(const FrickeElement& e);

// The same symbol from the two edge paths of g and conjugate_by_p(g):
//   (trace_a + trace_b) / 2 - 3 (signature_a + signature_b) / 2.
Rational phi_p_geometric(const FrickeElement& e);

}  // namespace rademacher
