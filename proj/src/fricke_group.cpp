#include "rademacher/fricke_group.hpp"

#include <string>

#include "rademacher/error.hpp"

namespace rademacher {

bool is_odd_prime(std::int64_t n) noexcept {
    if (n < 3 || n % 2 == 0) return false;
    for (std::int64_t f = 3; f <= n / f; f += 2)
        if (n % f == 0) return false;
    return true;
}

OddPrime::OddPrime(std::int64_t p) : p_(p) {
    if (!is_odd_prime(p)) fail(ErrorCode::not_odd_prime, std::to_string(p) + " is not an odd prime");
}

OddPrime::OddPrime(const Integer& p) : p_(0) {
    if (!fits_int64(p)) fail(ErrorCode::not_odd_prime, p.get_str() + " is out of range for a prime modulus");
    p_ = to_int64(p);
    if (!is_odd_prime(p_)) fail(ErrorCode::not_odd_prime, p.get_str() + " is not an odd prime");
}

FrickeElement FrickeElement::gamma0(OddPrime p, UnimodularMatrix m) {
    if (!mpz_divisible_ui_p(m.c().get_mpz_t(), static_cast<unsigned long>(p.value())))
        fail(ErrorCode::divisibility_violation,
             "lower-left entry " + m.c().get_str() + " is not divisible by " + std::to_string(p.value()));
    return FrickeElement(p, Gamma0Part{std::move(m)});
}

FrickeElement FrickeElement::coset(OddPrime p, Integer alpha, Integer beta, Integer gamma, Integer delta) {
    Integer det = p.as_integer() * alpha * delta - beta * gamma;
    if (det != 1)
        fail(ErrorCode::determinant_mismatch,
             "coset quadruple has p*alpha*delta - beta*gamma = " + det.get_str() + ", expected 1");
    return FrickeElement(p, FrickeCoset{std::move(alpha), std::move(beta), std::move(gamma), std::move(delta)});
}

FrickeElement FrickeElement::identity(OddPrime p) {
    return FrickeElement(p, Gamma0Part{UnimodularMatrix::identity()});
}

FrickeElement FrickeElement::fricke_involution(OddPrime p) {
    return FrickeElement(p, FrickeCoset{0, -1, 1, 0});
}

const UnimodularMatrix& FrickeElement::gamma0_matrix() const {
    if (auto* g = std::get_if<Gamma0Part>(&body_)) return g->matrix;
    fail(ErrorCode::precondition_violation, "element lies in the Fricke coset, not in Gamma_0(p)");
}

const FrickeCoset& FrickeElement::coset_entries() const {
    if (auto* c = std::get_if<FrickeCoset>(&body_)) return *c;
    fail(ErrorCode::precondition_violation, "element lies in Gamma_0(p), not in the Fricke coset");
}

IntMatrix2 FrickeElement::integer_matrix() const {
    if (auto* g = std::get_if<Gamma0Part>(&body_)) return g->matrix.as_int_matrix();
    const auto& q = std::get<FrickeCoset>(body_);
    Integer p = p_.as_integer();
    return {p * q.alpha, q.beta, p * q.gamma, p * q.delta};
}

Integer FrickeElement::det_scale() const { return in_gamma0() ? Integer(1) : p_.as_integer(); }

FrickeElement FrickeElement::operator-() const {
    if (auto* g = std::get_if<Gamma0Part>(&body_)) return FrickeElement(p_, Gamma0Part{-g->matrix});
    const auto& q = std::get<FrickeCoset>(body_);
    return FrickeElement(p_, FrickeCoset{-q.alpha, -q.beta, -q.gamma, -q.delta});
}

namespace {

bool divisible(const Integer& x, std::int64_t p) {
    return mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

}  // namespace

FrickeElement classify(OddPrime p, const IntMatrix2& m, DetScale det_scale) {
    Integer det = m.det();
    if (det_scale == DetScale::one) {
        if (det != 1)
            fail(ErrorCode::determinant_mismatch, "determinant " + det.get_str() + ", expected 1");
        return FrickeElement::gamma0(p, UnimodularMatrix(m));
    }
    Integer pz = p.as_integer();
    if (det != pz)
        fail(ErrorCode::determinant_mismatch,
             "determinant " + det.get_str() + ", expected " + pz.get_str());
    if (!divisible(m.m11, p.value()) || !divisible(m.m21, p.value()) || !divisible(m.m22, p.value()))
        fail(ErrorCode::divisibility_violation,
             "entries m11, m21, m22 of a Fricke-coset matrix must be divisible by " + pz.get_str());
    Integer alpha = m.m11 / pz, gamma = m.m21 / pz, delta = m.m22 / pz;
    return FrickeElement::coset(p, std::move(alpha), m.m12, std::move(gamma), std::move(delta));
}

FrickeElement classify(std::int64_t p, const IntMatrix2& m, DetScale det_scale) {
    return classify(OddPrime(p), m, det_scale);
}

FrickeElement gamma_plus_mul(const FrickeElement& x, const FrickeElement& y) {
    if (x.prime() != y.prime())
        fail(ErrorCode::prime_mismatch, "cannot multiply elements for p = " + std::to_string(x.prime().value()) +
                                            " and p = " + std::to_string(y.prime().value()));
    OddPrime p = x.prime();
    IntMatrix2 product = x.integer_matrix() * y.integer_matrix();
    if (x.in_gamma0() && y.in_gamma0()) return classify(p, product, DetScale::one);
    if (x.in_gamma0() != y.in_gamma0()) return classify(p, product, DetScale::prime);

    // Two coset factors: the det-p^2 product is p times a Gamma_0(p) matrix.
    Integer pz = p.as_integer();
    for (const Integer* e : {&product.m11, &product.m12, &product.m21, &product.m22})
        if (!divisible(*e, p.value()))
            fail(ErrorCode::internal_error, "coset product is not divisible by p");
    IntMatrix2 reduced{product.m11 / pz, product.m12 / pz, product.m21 / pz, product.m22 / pz};
    return classify(p, reduced, DetScale::one);
}

bool psl_eq(const FrickeElement& x, const FrickeElement& y) { return x == y || x == -y; }

std::ostream& operator<<(std::ostream& os, const FrickeElement& e) {
    if (e.in_gamma0()) return os << e.gamma0_matrix();
    const auto& q = e.coset_entries();
    return os << e.prime().value() << ':' << q.alpha << ',' << q.beta << ',' << q.gamma << ',' << q.delta;
}

}  // namespace rademacher
