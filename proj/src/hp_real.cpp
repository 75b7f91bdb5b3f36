#include "rademacher/hp_real.hpp"

#include <algorithm>
#include <cmath>

#include "rademacher/error.hpp"

namespace rademacher {

Precision::Precision(int digits) : digits_(digits) {
    if (digits < kMinDigits)
        fail(ErrorCode::precondition_violation,
             "precision of " + std::to_string(digits) + " digits is below the minimum of " +
                 std::to_string(kMinDigits));
}

mpfr_prec_t Precision::working_bits() const noexcept {
    return static_cast<mpfr_prec_t>(std::ceil((digits_ + kGuardDigits) * 3.321928094887362)) + 8;
}

Real::Real(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Integer& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    // Leave the source as a valid minimal-precision value.
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::pow10(long exponent, mpfr_prec_t bits) {
    Real r(10L, bits);
    mpfr_pow_si(r.v_, r.v_, exponent, MPFR_RNDN);
    return r;
}

Real Real::with_precision(mpfr_prec_t bits) const {
    Real r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int significant_digits) const {
    char* buffer = nullptr;
    int digits_after_point = std::max(significant_digits - 1, 0);
    if (mpfr_asprintf(&buffer, "%.*Re", digits_after_point, v_) < 0 || buffer == nullptr)
        fail(ErrorCode::internal_error, "mpfr_asprintf failed");
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

namespace {

mpfr_prec_t joint(const Real& x, const Real& y) { return std::max(x.precision(), y.precision()); }

void widen(Real& x, mpfr_prec_t bits) {
    if (x.precision() < bits) mpfr_prec_round(x.get(), bits, MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& y) {
    widen(*this, y.precision());
    mpfr_add(v_, v_, y.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& y) {
    widen(*this, y.precision());
    mpfr_sub(v_, v_, y.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& y) {
    widen(*this, y.precision());
    mpfr_mul(v_, v_, y.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& y) {
    widen(*this, y.precision());
    mpfr_div(v_, v_, y.v_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define RADEMACHER_UNARY(name, fn)                \
    Real name(const Real& x) {                    \
        Real r(x.precision());                    \
        fn(r.get(), x.get(), MPFR_RNDN);          \
        return r;                                 \
    }

RADEMACHER_UNARY(sqrt, mpfr_sqrt)
RADEMACHER_UNARY(exp, mpfr_exp)
RADEMACHER_UNARY(log, mpfr_log)
RADEMACHER_UNARY(log1p, mpfr_log1p)
RADEMACHER_UNARY(sin, mpfr_sin)
RADEMACHER_UNARY(cos, mpfr_cos)
RADEMACHER_UNARY(abs, mpfr_abs)

#undef RADEMACHER_UNARY

Real atan2(const Real& y, const Real& x) {
    Real r(joint(x, y));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r(joint(x, y));
    mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

HPComplex::HPComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {
    mpfr_prec_t bits = joint(re, im);
    widen(re, bits);
    widen(im, bits);
}

HPComplex HPComplex::from_rational(const Rational& re, const Rational& im, mpfr_prec_t bits) {
    return {Real(re, bits), Real(im, bits)};
}

HPComplex& HPComplex::operator+=(const HPComplex& w) {
    re += w.re;
    im += w.im;
    return *this;
}

HPComplex& HPComplex::operator-=(const HPComplex& w) {
    re -= w.re;
    im -= w.im;
    return *this;
}

HPComplex& HPComplex::operator*=(const HPComplex& w) {
    Real new_re = re * w.re - im * w.im;
    Real new_im = re * w.im + im * w.re;
    re = std::move(new_re);
    im = std::move(new_im);
    return *this;
}

HPComplex& HPComplex::operator/=(const HPComplex& w) {
    Real norm = w.re * w.re + w.im * w.im;
    Real new_re = (re * w.re + im * w.im) / norm;
    Real new_im = (im * w.re - re * w.im) / norm;
    re = std::move(new_re);
    im = std::move(new_im);
    return *this;
}

HPComplex& HPComplex::operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
}

std::string HPComplex::to_string(int significant_digits) const {
    return re.to_string(significant_digits) + "," + im.to_string(significant_digits);
}

Real abs(const HPComplex& z) { return hypot(z.re, z.im); }

HPComplex exp(const HPComplex& z) {
    Real scale = exp(z.re);
    return {scale * cos(z.im), scale * sin(z.im)};
}

HPComplex log(const HPComplex& z) {
    if (z.re.is_zero() && z.im.is_zero()) fail(ErrorCode::domain_error, "log of zero");
    // A negative zero imaginary part would give arg = -pi.
    if (z.im.is_zero()) return {log(abs(z)), z.re.sign() < 0 ? Real::pi(z.precision()) : Real(z.precision())};
    return {log(abs(z)), atan2(z.im, z.re)};
}

}  // namespace rademacher
