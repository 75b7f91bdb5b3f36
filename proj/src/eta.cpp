#include "rademacher/eta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rademacher/dedekind.hpp"
#include "rademacher/error.hpp"
#include "rademacher/fricke_symbol.hpp"

namespace rademacher {

namespace {

constexpr long kBlock = 16;

double log10_abs_q(double imag) { return -2.0 * std::numbers::pi * imag * std::numbers::log10e; }

void require_imag(const HPComplex& z, const Precision& precision, const EtaOptions& options) {
    double y = z.im.to_double();
    if (y >= options.min_imag) return;
    std::ostringstream msg;
    msg << "Im(z) = " << z.im.to_string(6) << " is below the threshold " << options.min_imag;
    if (y > 0) msg << "; the series would need about " << eta_truncation_terms(y, precision) << " terms";
    fail(ErrorCode::domain_error, msg.str());
}

// Bits on top of the working precision: error growth of q^n over N steps, the
// conditioning 1/(1-|q|)^2 of the series and the magnitude of log eta itself.
mpfr_prec_t series_bits(const Precision& precision, long terms, double imag) {
    double one_minus_q = -std::expm1(-2.0 * std::numbers::pi * imag);
    double extra = std::log2(static_cast<double>(terms) + 1.0) + 2.0 * std::log2(1.0 / one_minus_q) +
                   std::log2(1.0 + 1.0 / imag);
    return precision.working_bits() + static_cast<mpfr_prec_t>(std::ceil(extra)) + 4;
}

HPComplex nome(const HPComplex& z) {
    Real two_pi = Real::pi(z.precision()) * Real(2L, z.precision());
    return exp(HPComplex{-(two_pi * z.im), two_pi * z.re});
}

// sum_{n=1}^{terms} Log(1 - q^n) with principal logarithms termwise. Factors
// are multiplied in blocks and one logarithm is taken per block; the lost
// multiple of 2 pi i is restored from the sum of the factor arguments, each
// in (-pi/2, pi/2) because Re(1 - q^n) > 0.
HPComplex sum_log_factors(const HPComplex& q, long terms) {
    const mpfr_prec_t bits = q.precision();
    const Real one(1L, bits);
    HPComplex total(bits);
    HPComplex power = q;
    const double two_pi = 2.0 * std::numbers::pi;
    for (long start = 1; start <= terms; start += kBlock) {
        long stop = std::min(terms, start + kBlock - 1);
        HPComplex block{Real(1L, bits), Real(bits)};
        double arg_sum = 0.0;
        for (long n = start; n <= stop; ++n) {
            HPComplex factor{one - power.re, -power.im};
            arg_sum += std::atan2(-power.im.to_double(), 1.0 - power.re.to_double());
            block *= factor;
            power *= q;
        }
        HPComplex block_log = log(block);
        double winding = std::round((arg_sum - block_log.im.to_double()) / two_pi);
        if (winding != 0.0) block_log.im += Real::pi(bits) * Real(2L * static_cast<long>(winding), bits);
        total += block_log;
    }
    return total;
}

HPComplex leading_term(const HPComplex& z) {
    // pi i z / 12
    Real pi12 = Real::pi(z.precision()) / Real(12L, z.precision());
    return {-(pi12 * z.im), pi12 * z.re};
}

Real tail_bound(const HPComplex& q, long terms) {
    Real abs_q = abs(q);
    Real power(abs_q.precision());
    mpfr_pow_ui(power.get(), abs_q.get(), static_cast<unsigned long>(terms + 1), MPFR_RNDU);
    Real gap = Real(1L, abs_q.precision()) - abs_q;
    return power / (gap * gap);
}

HPComplex scale(const HPComplex& z, long factor) { return z * Real(factor, z.precision()); }

HPComplex pi_i_over_12_times(const Rational& x, mpfr_prec_t bits) {
    Real pi12 = Real::pi(bits) / Real(12L, bits);
    return {Real(bits), pi12 * Real(x, bits)};
}

// (1/2) Log(w / (i s)) for s = +-1, i.e. (1/2) Log(-i s w).
HPComplex half_branch_term(const HPComplex& w, int s) {
    HPComplex rotated = (s > 0) ? HPComplex{w.im, -w.re} : HPComplex{-w.im, w.re};
    HPComplex l = log(rotated);
    Real half(Rational(1, 2), w.precision());
    return l * half;
}

}  // namespace

long eta_truncation_terms(double imag, const Precision& precision) {
    if (!(imag > 0)) fail(ErrorCode::domain_error, "Im(z) must be positive");
    double log10_gap = std::log1p(-std::exp(-2.0 * std::numbers::pi * imag)) * std::numbers::log10e;
    double target = precision.digits() + Precision::kGuardDigits - 2.0 * log10_gap;
    double needed = target / -log10_abs_q(imag);  // N + 1 must exceed this
    return std::max(1L, static_cast<long>(std::ceil(needed)));
}

LogEtaResult log_eta_detailed(const HPComplex& z_in, const Precision& precision, const EtaOptions& options) {
    require_imag(z_in, precision, options);
    double y = z_in.im.to_double();
    long terms = eta_truncation_terms(y, precision);
    HPComplex z = z_in.with_precision(series_bits(precision, terms, y));
    HPComplex q = nome(z);
    HPComplex value = leading_term(z) + sum_log_factors(q, terms);
    return {value.with_precision(precision.working_bits()), terms, tail_bound(q, terms)};
}

HPComplex log_eta(const HPComplex& z, const Precision& precision, const EtaOptions& options) {
    return log_eta_detailed(z, precision, options).value;
}

HPComplex log_eta_truncated(const HPComplex& z_in, long terms, const Precision& precision) {
    double y = z_in.im.to_double();
    if (!(y > 0)) fail(ErrorCode::domain_error, "Im(z) must be positive");
    HPComplex z = z_in.with_precision(series_bits(precision, terms, y));
    HPComplex value = leading_term(z) + sum_log_factors(nome(z), terms);
    return value.with_precision(precision.working_bits());
}

HPComplex eta_product(const HPComplex& z_in, const Precision& precision, const EtaOptions& options) {
    require_imag(z_in, precision, options);
    double y = z_in.im.to_double();
    long terms = eta_truncation_terms(y, precision);
    const mpfr_prec_t bits = series_bits(precision, terms, y);
    HPComplex z = z_in.with_precision(bits);
    HPComplex q = nome(z);
    HPComplex product{Real(1L, bits), Real(bits)};
    HPComplex power = q;
    const Real one(1L, bits);
    for (long n = 1; n <= terms; ++n) {
        product *= HPComplex{one - power.re, -power.im};
        power *= q;
    }
    // q^{1/24} = e^{2 pi i z / 24}
    Real pi12 = Real::pi(bits) / Real(12L, bits);
    HPComplex root = exp(HPComplex{-(pi12 * z.im), pi12 * z.re});
    return (root * product).with_precision(precision.working_bits());
}

HPComplex log_eta_p(OddPrime p, const HPComplex& z, const Precision& precision, const EtaOptions& options) {
    HPComplex sum = log_eta(z, precision, options) + log_eta(scale(z, p.value()), precision, options);
    return sum * Real(Rational(1, 2), sum.precision());
}

HPComplex delta_p(OddPrime p, const HPComplex& z, const Precision& precision, const EtaOptions& options) {
    HPComplex base = eta_product(z, precision, options) * eta_product(scale(z, p.value()), precision, options);
    HPComplex result{Real(1L, base.precision()), Real(base.precision())};
    for (long i = 0, k = k_of_p(p); i < k; ++i) result *= base;
    return result;
}

BranchDiscrepancy principal_branch_discrepancy(OddPrime p, const HPComplex& z, const Precision& precision,
                                               const EtaOptions& options) {
    const long two_k = 2 * k_of_p(p);
    const mpfr_prec_t bits = precision.working_bits();
    HPComplex principal = log(delta_p(p, z, precision, options)) * Real(Rational(1, two_k), bits);
    HPComplex difference = principal - log_eta_p(p, z, precision, options);
    // difference = 2 pi i (index / 2k + integer)
    Real turns = difference.im * Real(two_k, bits) / (Real::pi(bits) * Real(2L, bits));
    Real nearest(bits);
    mpfr_round(nearest.get(), turns.get());
    long index = mpfr_get_si(nearest.get(), MPFR_RNDN) % two_k;
    if (index < 0) index += two_k;
    return {index, two_k, abs(turns - nearest) + abs(difference.re)};
}

HPComplex mobius(const UnimodularMatrix& g, const HPComplex& z) {
    const mpfr_prec_t bits = z.precision();
    HPComplex numerator = z * Real(g.a(), bits) + HPComplex{Real(g.b(), bits), Real(bits)};
    HPComplex denominator = z * Real(g.c(), bits) + HPComplex{Real(g.d(), bits), Real(bits)};
    return numerator / denominator;
}

HPComplex act(const FrickeElement& e, const HPComplex& z) {
    if (e.in_gamma0()) return mobius(e.gamma0_matrix(), z);
    const mpfr_prec_t bits = z.precision();
    IntMatrix2 m = e.integer_matrix();
    HPComplex numerator = z * Real(m.m11, bits) + HPComplex{Real(m.m12, bits), Real(bits)};
    HPComplex denominator = z * Real(m.m21, bits) + HPComplex{Real(m.m22, bits), Real(bits)};
    return numerator / denominator;
}

bool VerificationReport::residual_below_pow10(long exponent) const {
    return residual < Real::pow10(exponent, residual.precision());
}

VerificationReport verify_eta_transform(const UnimodularMatrix& g, const HPComplex& z_in, const Precision& precision,
                                        const EtaOptions& options) {
    const mpfr_prec_t bits = precision.working_bits();
    HPComplex z = z_in.with_precision(bits);
    HPComplex gz = mobius(g, z);
    LogEtaResult left = log_eta_detailed(gz, precision, options);
    LogEtaResult right = log_eta_detailed(z, precision, options);
    HPComplex rhs = right.value + pi_i_over_12_times(Rational(rademacher_phi(g)), bits);
    if (int s = sgn(g.c()); s != 0) {
        HPComplex cz_d = z * Real(g.c(), bits) + HPComplex{Real(g.d(), bits), Real(bits)};
        rhs += half_branch_term(cz_d, s);
    }
    Real residual = abs(left.value - rhs);
    return {left.value, rhs, residual, std::max(left.terms, right.terms), precision.digits()};
}

VerificationReport verify_theorem1(const FrickeElement& e, const HPComplex& z_in, const Precision& precision,
                                   const EtaOptions& options) {
    const mpfr_prec_t bits = precision.working_bits();
    HPComplex z = z_in.with_precision(bits);
    HPComplex ez = act(e, z);
    HPComplex lhs = log_eta_p(e.prime(), ez, precision, options);
    HPComplex rhs = log_eta_p(e.prime(), z, precision, options) + pi_i_over_12_times(phi_p(e), bits);

    // cz + d with the real entries of the element; for coset elements
    // c = sqrt(p) gamma and d = sqrt(p) delta, so sgn(c) = sgn(gamma).
    int s = 0;
    HPComplex cz_d(bits);
    if (e.in_gamma0()) {
        const UnimodularMatrix& g = e.gamma0_matrix();
        s = sgn(g.c());
        cz_d = z * Real(g.c(), bits) + HPComplex{Real(g.d(), bits), Real(bits)};
    } else {
        const FrickeCoset& q = e.coset_entries();
        s = sgn(q.gamma);
        Real root_p = sqrt(Real(static_cast<long>(e.prime().value()), bits));
        cz_d = (z * Real(q.gamma, bits) + HPComplex{Real(q.delta, bits), Real(bits)}) * root_p;
    }
    if (s != 0) rhs += half_branch_term(cz_d, s);

    long terms = 0;
    for (const HPComplex* w : {&z, &ez}) {
        terms = std::max(terms, eta_truncation_terms(w->im.to_double(), precision));
        terms = std::max(terms, eta_truncation_terms(w->im.to_double() * static_cast<double>(e.prime().value()),
                                                     precision));
    }
    Real residual = abs(lhs - rhs);
    return {lhs, rhs, residual, terms, precision.digits()};
}

}  // namespace rademacher
