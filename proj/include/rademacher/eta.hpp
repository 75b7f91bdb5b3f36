#pragma once

// High-precision log eta, log eta_p and residual checks of the eta
// transformation law and its Gamma_0^+(p) analogue.

#include "rademacher/fricke_group.hpp"
#include "rademacher/hp_real.hpp"

namespace rademacher {

struct EtaOptions {
    // Evaluations at points with smaller imaginary part are refused.
    double min_imag = 1e-3;
};

struct LogEtaResult {
    HPComplex value;
    long terms;       // factors (1 - q^n) kept
    Real tail_bound;  // |q|^(N+1) / (1 - |q|)^2 bounds the dropped part
};

// Factors needed so that |q|^(N+1) / (1 - |q|)^2 < 10^-(digits + guard) at Im z = y.
long eta_truncation_terms(double imag, const Precision& precision);

// pi i z / 12 + sum_{n <= N} Log(1 - q^n), q = e^{2 pi i z}, with principal
// logarithms termwise: the holomorphic branch of log eta. Throws domain_error
// when Im z < options.min_imag.
LogEtaResult log_eta_detailed(const HPComplex& z, const Precision& precision, const EtaOptions& options = {});
HPComplex log_eta(const HPComplex& z, const Precision& precision, const EtaOptions& options = {});

// Same series cut after exactly `terms` factors.
HPComplex log_eta_truncated(const HPComplex& z, long terms, const Precision& precision);

// eta(z) = q^{1/24} prod (1 - q^n) as a plain product, no logarithms.
HPComplex eta_product(const HPComplex& z, const Precision& precision, const EtaOptions& options = {});

// (log eta(z) + log eta(pz)) / 2.
HPComplex log_eta_p(OddPrime p, const HPComplex& z, const Precision& precision, const EtaOptions& options = {});

// Delta_p(z) = eta(z)^k eta(pz)^k with k = k_of_p(p), from products.
HPComplex delta_p(OddPrime p, const HPComplex& z, const Precision& precision, const EtaOptions& options = {});

// exp(PrincipalLog(Delta_p(z)) / 2k) = exp(log_eta_p(z)) * e^{2 pi i index / 2k}.
struct BranchDiscrepancy {
    long index;          // in [0, 2k)
    long two_k;
    Real rounding_error; // distance of the measured phase from index, in units of 2 pi / 2k
};
BranchDiscrepancy principal_branch_discrepancy(OddPrime p, const HPComplex& z, const Precision& precision,
                                               const EtaOptions& options = {});

// Moebius action (az + b) / (cz + d).
HPComplex mobius(const UnimodularMatrix& g, const HPComplex& z);
// Action of an element of Gamma_0^+(p); coset elements act by
// (p alpha z + beta) / (p gamma z + p delta).
HPComplex act(const FrickeElement& e, const HPComplex& z);

struct VerificationReport {
    HPComplex lhs;
    HPComplex rhs;
    Real residual;
    long truncation_terms;  // largest N over the series evaluated
    int precision;          // decimal digits

    bool residual_below(const Real& tolerance) const { return residual < tolerance; }
    // residual < 10^exponent
    bool residual_below_pow10(long exponent) const;
};

// log eta(gz) against log eta(z) + sgn(c)^2 Log((cz+d)/(i sgn c)) / 2 + (pi i / 12) Phi(g).
VerificationReport verify_eta_transform(const UnimodularMatrix& g, const HPComplex& z, const Precision& precision,
                                        const EtaOptions& options = {});

// log eta_p(ez) against log eta_p(z) + sgn(c)^2 Log((cz+d)/(i sgn c)) / 2 + (pi i / 12) Phi_p(e),
// with the real entries (sqrt p alpha, beta / sqrt p, sqrt p gamma, sqrt p delta) for coset elements.
VerificationReport verify_theorem1(const FrickeElement& e, const HPComplex& z, const Precision& precision,
                                   const EtaOptions& options = {});

}  // namespace rademacher
