#pragma once

// Exact scalars shared by every module: arbitrary-size integers and
// canonical rationals (GMP), plus the sign convention sgn(0) = 0.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace rademacher {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical: reduced, denominator > 0

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(const Integer& x) noexcept {
    int s = sgn(x);
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

inline Sign sign_of(const Rational& x) noexcept {
    int s = sgn(x);
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

inline int to_int(Sign s) noexcept { return static_cast<int>(s); }

inline Sign operator*(Sign x, Sign y) noexcept {
    return static_cast<Sign>(to_int(x) * to_int(y));
}

inline Integer abs_value(const Integer& x) { return abs(x); }

// Floor division and the matching non-negative remainder for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);

Integer floor_of(const Rational& x);
bool is_integral(const Rational& x);

// Builds a canonical rational from numerator/denominator (denominator != 0).
Rational make_rational(const Integer& num, const Integer& den);

// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

// Parses "123", "-4", "3/8", "0.125", "-2.5" exactly. Throws parse_error.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

bool fits_int64(const Integer& x) noexcept;
std::int64_t to_int64(const Integer& x);

}  // namespace rademacher
