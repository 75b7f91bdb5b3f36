#pragma once

#include <ostream>

#include "rademacher/arith.hpp"

namespace rademacher {

// Plain integer 2x2 matrix with no determinant constraint. Used for input
// that still has to be classified and for exporting Fricke-coset elements.
struct IntMatrix2 {
    Integer m11, m12, m21, m22;

    Integer det() const { return m11 * m22 - m12 * m21; }
    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y);

// (a b; c d) with ad - bc = 1. Immutable; -g is a distinct value, compare
// with psl_eq when the sign should not matter.
class UnimodularMatrix {
public:
    // Throws determinant_mismatch unless ad - bc = 1.
    UnimodularMatrix(Integer a, Integer b, Integer c, Integer d);
    explicit UnimodularMatrix(const IntMatrix2& m);

    static UnimodularMatrix identity();
    static UnimodularMatrix S();
    static UnimodularMatrix T();
    static UnimodularMatrix T_power(const Integer& n);
    // T^n S = (n, -1; 1, 0), the letter of a turn word.
    static UnimodularMatrix turn(const Integer& n);

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }
    const Integer& c() const noexcept { return c_; }
    const Integer& d() const noexcept { return d_; }

    UnimodularMatrix operator-() const;
    UnimodularMatrix inverse() const;
    IntMatrix2 as_int_matrix() const { return {a_, b_, c_, d_}; }

    friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

private:
    struct Unchecked {};
    UnimodularMatrix(Unchecked, Integer a, Integer b, Integer c, Integer d) noexcept
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    friend UnimodularMatrix mat_mul(const UnimodularMatrix& x, const UnimodularMatrix& y);

    Integer a_, b_, c_, d_;
};

UnimodularMatrix mat_mul(const UnimodularMatrix& x, const UnimodularMatrix& y);

inline UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y) {
    return mat_mul(x, y);
}

// Equality in PSL2(Z): x == y or x == -y.
bool psl_eq(const UnimodularMatrix& x, const UnimodularMatrix& y);

std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix2& m);

}  // namespace rademacher
