#pragma once

#include <cstdint>
#include <ostream>
#include <variant>

#include "rademacher/matrix.hpp"

namespace rademacher {

// An odd prime, checked by trial division at construction.
class OddPrime {
public:
    explicit OddPrime(std::int64_t p);
    explicit OddPrime(const Integer& p);

    std::int64_t value() const noexcept { return p_; }
    Integer as_integer() const { return Integer(static_cast<long>(p_)); }

    friend bool operator==(OddPrime, OddPrime) = default;

private:
    std::int64_t p_;
};

bool is_odd_prime(std::int64_t n) noexcept;

// Element of the Fricke coset, stored as the integer quadruple of the normal
// form (1/sqrt p)(p*alpha, beta; p*gamma, p*delta), p*alpha*delta - beta*gamma = 1.
struct FrickeCoset {
    Integer alpha, beta, gamma, delta;
    friend bool operator==(const FrickeCoset&, const FrickeCoset&) = default;
};

// Element of Gamma_0(p): a determinant-1 matrix with p | c.
struct Gamma0Part {
    UnimodularMatrix matrix;
    friend bool operator==(const Gamma0Part&, const Gamma0Part&) = default;
};

// Element of Gamma_0^+(p), the group generated by Gamma_0(p) and the Fricke
// involution W_p.
class FrickeElement {
public:
    using Body = std::variant<Gamma0Part, FrickeCoset>;

    // Throw divisibility_violation / determinant_mismatch on bad input.
    static FrickeElement gamma0(OddPrime p, UnimodularMatrix m);
    static FrickeElement coset(OddPrime p, Integer alpha, Integer beta, Integer gamma, Integer delta);

    static FrickeElement identity(OddPrime p);
    // W_p = (1/sqrt p)(0, -1; p, 0).
    static FrickeElement fricke_involution(OddPrime p);

    OddPrime prime() const noexcept { return p_; }
    const Body& body() const noexcept { return body_; }
    bool in_gamma0() const noexcept { return std::holds_alternative<Gamma0Part>(body_); }
    const UnimodularMatrix& gamma0_matrix() const;  // precondition_violation for cosets
    const FrickeCoset& coset_entries() const;        // precondition_violation for Gamma0

    // Gamma0: the matrix itself (det 1). Coset: (p*alpha, beta; p*gamma, p*delta) (det p).
    IntMatrix2 integer_matrix() const;
    Integer det_scale() const;

    FrickeElement operator-() const;

    friend bool operator==(const FrickeElement&, const FrickeElement&) = default;

private:
    FrickeElement(OddPrime p, Body body) : p_(p), body_(std::move(body)) {}

    OddPrime p_;
    Body body_;
};

enum class DetScale { one, prime };

// Reads an integer matrix back into Gamma_0^+(p). det_scale = one expects a
// Gamma_0(p) matrix; det_scale = prime expects the det-p integer form of a
// coset element.
FrickeElement classify(OddPrime p, const IntMatrix2& m, DetScale det_scale);
FrickeElement classify(std::int64_t p, const IntMatrix2& m, DetScale det_scale);

FrickeElement gamma_plus_mul(const FrickeElement& x, const FrickeElement& y);

inline FrickeElement operator*(const FrickeElement& x, const FrickeElement& y) {
    return gamma_plus_mul(x, y);
}

bool psl_eq(const FrickeElement& x, const FrickeElement& y);

std::ostream& operator<<(std::ostream& os, const FrickeElement& e);

}  // namespace rademacher
