#pragma once

// RAII wrapper over MPFR plus a complex type built from two of them. Binary
// operations round to the larger of the operand precisions.

#include <mpfr.h>

#include <string>
#include <utility>

#include "rademacher/arith.hpp"

namespace rademacher {

// Working precision in decimal digits (>= 30).
class Precision {
public:
    static constexpr int kMinDigits = 30;
    static constexpr int kGuardDigits = 10;

    explicit Precision(int digits);

    int digits() const noexcept { return digits_; }
    // Bits carrying digits + guard digits.
    mpfr_prec_t working_bits() const noexcept;

private:
    int digits_;
};

class Real {
public:
    explicit Real(mpfr_prec_t bits);
    Real(long value, mpfr_prec_t bits);
    Real(const Integer& value, mpfr_prec_t bits);
    Real(const Rational& value, mpfr_prec_t bits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real pi(mpfr_prec_t bits);
    static Real pow10(long exponent, mpfr_prec_t bits);

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
    Real with_precision(mpfr_prec_t bits) const;

    mpfr_srcptr get() const noexcept { return v_; }
    mpfr_ptr get() noexcept { return v_; }

    int sign() const noexcept { return mpfr_sgn(v_); }
    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

    // Scientific notation with the given number of significant digits.
    std::string to_string(int significant_digits) const;

    Real& operator+=(const Real& y);
    Real& operator-=(const Real& y);
    Real& operator*=(const Real& y);
    Real& operator/=(const Real& y);

    Real operator-() const;

    friend Real operator+(Real x, const Real& y) { return x += y; }
    friend Real operator-(Real x, const Real& y) { return x -= y; }
    friend Real operator*(Real x, const Real& y) { return x *= y; }
    friend Real operator/(Real x, const Real& y) { return x /= y; }

    friend bool operator<(const Real& x, const Real& y) { return mpfr_less_p(x.v_, y.v_) != 0; }
    friend bool operator>(const Real& x, const Real& y) { return mpfr_greater_p(x.v_, y.v_) != 0; }
    friend bool operator<=(const Real& x, const Real& y) { return mpfr_lessequal_p(x.v_, y.v_) != 0; }

private:
    mpfr_t v_;
};

Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real abs(const Real& x);

struct HPComplex {
    Real re;
    Real im;

    HPComplex(Real r, Real i);
    explicit HPComplex(mpfr_prec_t bits) : re(bits), im(bits) {}

    static HPComplex from_rational(const Rational& re, const Rational& im, mpfr_prec_t bits);
    static HPComplex i(mpfr_prec_t bits) { return {Real(0L, bits), Real(1L, bits)}; }

    mpfr_prec_t precision() const noexcept { return re.precision(); }
    HPComplex with_precision(mpfr_prec_t bits) const { return {re.with_precision(bits), im.with_precision(bits)}; }

    HPComplex& operator+=(const HPComplex& w);
    HPComplex& operator-=(const HPComplex& w);
    HPComplex& operator*=(const HPComplex& w);
    HPComplex& operator/=(const HPComplex& w);
    HPComplex& operator*=(const Real& s);

    HPComplex operator-() const { return {-re, -im}; }

    friend HPComplex operator+(HPComplex z, const HPComplex& w) { return z += w; }
    friend HPComplex operator-(HPComplex z, const HPComplex& w) { return z -= w; }
    friend HPComplex operator*(HPComplex z, const HPComplex& w) { return z *= w; }
    friend HPComplex operator/(HPComplex z, const HPComplex& w) { return z /= w; }
    friend HPComplex operator*(HPComplex z, const Real& s) { return z *= s; }

    // "re,im" in scientific notation.
    std::string to_string(int significant_digits) const;
};

Real abs(const HPComplex& z);
HPComplex exp(const HPComplex& z);
// Principal branch: arg in (-pi, pi].
HPComplex log(const HPComplex& z);

}  // namespace rademacher
