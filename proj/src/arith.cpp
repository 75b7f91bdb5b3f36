#include "rademacher/arith.hpp"

#include <limits>

#include "rademacher/error.hpp"

namespace rademacher {

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) fail(ErrorCode::internal_error, "floor_div by zero");
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
    if (b == 0) fail(ErrorCode::internal_error, "mod_floor by zero");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer floor_of(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorCode::internal_error, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body))
        fail(ErrorCode::parse_error, "not an integer: '" + std::string(text) + "'");
    Integer v(std::string(body), 10);
    return negative ? Integer(-v) : v;
}

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text))
            fail(ErrorCode::parse_error, "bad denominator in '" + std::string(text) + "'");
        Integer den(std::string(den_text), 10);
        if (den == 0) fail(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
        return make_rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            fail(ErrorCode::parse_error, "not a decimal: '" + std::string(text) + "'");
        std::string digits = std::string(whole) + std::string(frac);
        Integer num(digits.empty() ? std::string("0") : digits, 10);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        return make_rational(negative ? Integer(-num) : num, den);
    }
    return Rational(parse_integer(text));
}

bool fits_int64(const Integer& x) noexcept {
    static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()), 10);
    static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()), 10);
    return x >= lo && x <= hi;
}

std::int64_t to_int64(const Integer& x) {
    if (!fits_int64(x)) fail(ErrorCode::domain_error, "integer does not fit in 64 bits: " + x.get_str());
    return std::stoll(x.get_str());
}

}  // namespace rademacher
