#include "rademacher/dedekind.hpp"

#include <cstdint>

#include "rademacher/error.hpp"

namespace rademacher {

Rational sawtooth(const Rational& x) {
    if (is_integral(x)) return Rational(0);
    return x - Rational(floor_of(x)) - Rational(1, 2);
}

namespace {

void check_dedekind_args(const Integer& h, const Integer& k) {
    if (k <= 0) fail(ErrorCode::precondition_violation, "dedekind_sum: k = " + k.get_str() + " must be positive");
    Integer g = gcd(h, k);
    if (g != 1)
        fail(ErrorCode::precondition_violation,
             "dedekind_sum: gcd(" + h.get_str() + ", " + k.get_str() + ") = " + g.get_str() + " != 1");
}

constexpr long kMachineLoopLimit = 1L << 20;

}  // namespace

Rational dedekind_sum_literal(const Integer& h, const Integer& k) {
    check_dedekind_args(h, k);
    Integer h_red = mod_floor(h, k);

    // With r = h*mu mod k, ((h mu/k)) ((mu/k)) = (2r - k)(2mu - k) / (4k^2)
    // whenever neither argument is integral; those terms are zero otherwise.
    Integer numerator = 0;
    if (k < kMachineLoopLimit) {
        const std::int64_t kk = k.get_si();
        const std::int64_t hh = h_red.get_si();
        std::int64_t acc = 0;
        for (std::int64_t mu = 1; mu < kk; ++mu) {
            std::int64_t r = (hh * mu) % kk;
            if (r == 0) continue;
            acc += (2 * r - kk) * (2 * mu - kk);
        }
        numerator = Integer(static_cast<long>(acc));
    } else {
        Integer r, term;
        for (Integer mu = 1; mu < k; ++mu) {
            r = h_red * mu;
            mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), k.get_mpz_t());
            if (r == 0) continue;
            term = (2 * r - k) * (2 * mu - k);
            numerator += term;
        }
    }
    return make_rational(numerator, 4 * k * k);
}

Rational dedekind_sum_reciprocity(const Integer& h, const Integer& k) {
    check_dedekind_args(h, k);
    Integer num = mod_floor(h, k);
    Integer den = k;
    Rational acc = 0;
    bool negate = false;
    // Invariant: s(h, k) = acc + (negate ? -1 : 1) * s(num, den), 0 <= num < den.
    while (num != 0) {
        Rational step = make_rational(num * num + den * den + 1, 12 * num * den) - Rational(1, 4);
        if (negate)
            acc -= step;
        else
            acc += step;
        Integer next = mod_floor(den, num);
        den = num;
        num = std::move(next);
        negate = !negate;
    }
    // num == 0 forces den == 1 by coprimality, and s(0, 1) = 0.
    return acc;
}

Rational dedekind_sum(const Integer& h, const Integer& k, const DedekindOptions& options) {
    if (k > 0 && k < options.literal_threshold) return dedekind_sum_literal(h, k);
    return dedekind_sum_reciprocity(h, k);
}

Integer rademacher_phi(const UnimodularMatrix& g) {
    Rational value;
    if (g.c() == 0) {
        value = make_rational(g.b(), g.d());
    } else {
        Integer abs_c = abs(g.c());
        value = make_rational(g.a() + g.d(), g.c()) - 12 * to_int(sign_of(g.c())) * dedekind_sum(g.d(), abs_c);
    }
    if (!is_integral(value))
        fail(ErrorCode::internal_error, "Rademacher symbol evaluated to non-integer " + to_string(value));
    return value.get_num();
}

}  // namespace rademacher
