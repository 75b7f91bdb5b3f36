#include "rademacher/fricke_symbol.hpp"

#include "rademacher/dedekind.hpp"
#include "rademacher/error.hpp"
#include "rademacher/tridiag.hpp"
#include "rademacher/word_paths.hpp"

namespace rademacher {

long k_of_p(OddPrime p) {
    const std::int64_t pm1 = p.value() - 1;
    for (long k = 2;; k += 2)
        if ((pm1 % 24) * k % 24 == 0) return k;
}

UnimodularMatrix conjugate_by_p(const FrickeElement& e) {
    const UnimodularMatrix& g = e.gamma0_matrix();
    Integer p = e.prime().as_integer();
    Integer c_over_p;
    mpz_divexact(c_over_p.get_mpz_t(), g.c().get_mpz_t(), p.get_mpz_t());
    return UnimodularMatrix(g.a(), p * g.b(), std::move(c_over_p), g.d());
}

UnimodularMatrix fricke_reduce(const FrickeElement& e) {
    const FrickeCoset& q = e.coset_entries();
    Integer p = e.prime().as_integer();
    return UnimodularMatrix(q.gamma, q.delta, -p * q.alpha, -q.beta);
}

namespace {

Rational half_sum(const Integer& x, const Integer& y) { return make_rational(x + y, 2); }

// sgn(-a c) for the real entries a = sqrt(p) alpha, c = sqrt(p) gamma.
int coset_sign_term(const FrickeElement& e) {
    const FrickeCoset& q = e.coset_entries();
    return -sgn(q.alpha) * sgn(q.gamma);
}

template <typename Gamma0Symbol>
Rational evaluate(const FrickeElement& e, Gamma0Symbol&& on_gamma0) {
    if (e.in_gamma0()) return on_gamma0(e);
    // One step always lands in Gamma_0(p); FrickeElement::gamma0 re-checks p | c.
    FrickeElement reduced = FrickeElement::gamma0(e.prime(), fricke_reduce(e));
    return on_gamma0(reduced) - 3 * coset_sign_term(e);
}

}  // namespace

Rational phi_p(const FrickeElement& e) {
    return evaluate(e, [](const FrickeElement& g) -> Rational {
        return half_sum(rademacher_phi(g.gamma0_matrix()), rademacher_phi(conjugate_by_p(g)));
    });
}

Rational phi_p_geometric(const FrickeElement& e) {
    return evaluate(e, [](const FrickeElement& g) -> Rational {
        EdgeWord alpha = decompose(g.gamma0_matrix());
        EdgeWord beta = decompose(conjugate_by_p(g));
        Integer traces = trace(alpha) + trace(beta);
        Integer signatures = Integer(signature(alpha)) + signature(beta);
        return make_rational(traces, 2) - 3 * make_rational(signatures, 2);
    });
}

}  // namespace rademacher
