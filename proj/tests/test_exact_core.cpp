#include <doctest.h>

#include "rademacher/error.hpp"
#include "rademacher/fricke_group.hpp"
#include "rademacher/text_format.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace rademacher;
using namespace rademacher::testing;

namespace {

UnimodularMatrix M(long a, long b, long c, long d) { return UnimodularMatrix(a, b, c, d); }
const UnimodularMatrix S = UnimodularMatrix::S();
const UnimodularMatrix T = UnimodularMatrix::T();
const UnimodularMatrix I = UnimodularMatrix::identity();

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::internal_error;
}

}  // namespace

TEST_CASE("unimodular matrix rejects determinant other than 1") {
    CHECK(code_of([] { M(1, 2, 3, 4); }) == ErrorCode::determinant_mismatch);
    CHECK(code_of([] { M(1, 1, 0, 2); }) == ErrorCode::determinant_mismatch);
    CHECK_NOTHROW(M(2, 1, 1, 1));
}

TEST_CASE("mat_mul examples") {
    CHECK(S * S == M(-1, 0, 0, -1));
    CHECK(T * T == M(1, 2, 0, 1));

    UnimodularMatrix Tm2 = UnimodularMatrix::T_power(-2);
    UnimodularMatrix product = S * Tm2 * S * T * S * Tm2 * S;
    CHECK(product == M(3, 1, 8, 3));
    // Brute-force product oracle with T^-2 spelled out.
    IntMatrix2 oracle = oracle_product({kS, kTinv, kTinv, kS, kT, kS, kTinv, kTinv, kS});
    CHECK(oracle == IntMatrix2{3, 1, 8, 3});
}

TEST_CASE("psl_eq examples") {
    CHECK(psl_eq(S * S, I));
    CHECK_FALSE(psl_eq(T, T.inverse()));
    UnimodularMatrix Ti = T.inverse();
    CHECK(psl_eq(S * Ti * S * Ti * S, T));
}

TEST_CASE("mat_mul keeps determinant 1 on large random entries") {
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        UnimodularMatrix x = scrambled_matrix(rng, 40, 1000);
        UnimodularMatrix y = scrambled_matrix(rng, 40, 1000);
        UnimodularMatrix xy = x * y;
        CHECK(xy.a() * xy.d() - xy.b() * xy.c() == 1);
        CHECK(xy.as_int_matrix() == x.as_int_matrix() * y.as_int_matrix());
    }
}

TEST_CASE("psl_eq is an equivalence relation identifying g and -g") {
    Rng rng(12);
    for (int i = 0; i < 500; ++i) {
        UnimodularMatrix x = scrambled_matrix(rng, 8, 4);
        UnimodularMatrix y = uniform(rng, 0, 1) ? -x : x;
        UnimodularMatrix z = uniform(rng, 0, 1) ? -y : scrambled_matrix(rng, 8, 4);
        CHECK(psl_eq(x, x));
        CHECK(psl_eq(x, -x));
        CHECK(psl_eq(x, y) == psl_eq(y, x));
        if (psl_eq(x, y) && psl_eq(y, z)) CHECK(psl_eq(x, z));
    }
}

TEST_CASE("odd prime validation") {
    CHECK(OddPrime(3).value() == 3);
    CHECK(OddPrime(13).value() == 13);
    CHECK(code_of([] { OddPrime(2); }) == ErrorCode::not_odd_prime);
    CHECK(code_of([] { OddPrime(9); }) == ErrorCode::not_odd_prime);
    CHECK(code_of([] { OddPrime(1); }) == ErrorCode::not_odd_prime);
    CHECK(code_of([] { OddPrime(-5); }) == ErrorCode::not_odd_prime);
}

TEST_CASE("gamma_plus_mul examples") {
    OddPrime p5(5);
    FrickeElement w5 = FrickeElement::fricke_involution(p5);
    FrickeElement w5_squared = w5 * w5;
    CHECK(w5_squared.in_gamma0());
    CHECK(w5_squared.gamma0_matrix() == M(-1, 0, 0, -1));
    CHECK(psl_eq(w5_squared, FrickeElement::identity(p5)));

    // W_p g' = (1/sqrt p)(-c', -d'; p a', p b') for g' = (1,0;5,1).
    FrickeElement g = FrickeElement::gamma0(p5, M(1, 0, 5, 1));
    FrickeElement wg = w5 * g;
    REQUIRE_FALSE(wg.in_gamma0());
    CHECK(wg.integer_matrix() == IntMatrix2{-5, -1, 5, 0});
    CHECK(wg.coset_entries() == FrickeCoset{-1, -1, 1, 0});

    CHECK(FrickeElement::identity(p5) * wg == wg);
    CHECK(FrickeElement::identity(p5) * g == g);
}

TEST_CASE("gamma_plus_mul rejects mismatched primes") {
    CHECK(code_of([] {
              gamma_plus_mul(FrickeElement::identity(OddPrime(5)), FrickeElement::identity(OddPrime(7)));
          }) == ErrorCode::prime_mismatch);
}

TEST_CASE("classify examples and errors") {
    FrickeElement g = classify(5, IntMatrix2{1, 0, 5, 1}, DetScale::one);
    CHECK(g.in_gamma0());
    FrickeElement w = classify(5, IntMatrix2{0, -1, 5, 0}, DetScale::prime);
    CHECK(w == FrickeElement::fricke_involution(OddPrime(5)));

    CHECK(code_of([] { classify(5, IntMatrix2{1, 1, 1, 3}, DetScale::one); }) == ErrorCode::determinant_mismatch);
    CHECK(code_of([] { classify(5, IntMatrix2{1, 0, 1, 1}, DetScale::one); }) == ErrorCode::divisibility_violation);
    CHECK(code_of([] { classify(5, IntMatrix2{1, 0, 5, 1}, DetScale::prime); }) ==
          ErrorCode::determinant_mismatch);
    // det 5 but m11 not divisible by 5.
    CHECK(code_of([] { classify(5, IntMatrix2{1, 2, 0, 5}, DetScale::prime); }) ==
          ErrorCode::divisibility_violation);
    CHECK(code_of([] { classify(15, IntMatrix2{1, 0, 15, 1}, DetScale::one); }) == ErrorCode::not_odd_prime);
    CHECK(code_of([] { FrickeElement::coset(OddPrime(5), 1, 1, 1, 1); }) == ErrorCode::determinant_mismatch);
    CHECK(code_of([] { FrickeElement::gamma0(OddPrime(5), M(1, 0, 1, 1)); }) == ErrorCode::divisibility_violation);
}

TEST_CASE("Gamma_0^+(p) group properties on random elements") {
    Rng rng(13);
    for (long pv : {3L, 5L, 7L, 11L, 13L}) {
        OddPrime p(pv);
        auto random_element = [&] { return uniform(rng, 0, 1) ? random_gamma0(rng, p) : random_coset(rng, p); };
        FrickeElement w = FrickeElement::fricke_involution(p);
        CHECK(psl_eq(w * w, FrickeElement::identity(p)));
        for (int i = 0; i < 200; ++i) {
            FrickeElement x = random_element(), y = random_element(), z = random_element();
            CHECK((x * y) * z == x * (y * z));
            // Coset flags multiply like Z/2.
            CHECK((x * y).in_gamma0() == (x.in_gamma0() == y.in_gamma0()));
            // classify inverts the export to integer matrices.
            DetScale scale = x.in_gamma0() ? DetScale::one : DetScale::prime;
            CHECK(classify(p, x.integer_matrix(), scale) == x);
            CHECK(x.integer_matrix().det() == x.det_scale());
        }
    }
}

TEST_CASE("text formats") {
    CHECK(parse_matrix("3,1,8,3") == M(3, 1, 8, 3));
    CHECK(parse_matrix("-1,0,0,-1") == M(-1, 0, 0, -1));
    CHECK(format_matrix(M(3, 1, 8, 3)) == "3,1,8,3");
    CHECK(code_of([] { parse_matrix("3, 1,8,3"); }) == ErrorCode::parse_error);
    CHECK(code_of([] { parse_matrix("3,1,8"); }) == ErrorCode::parse_error);
    CHECK(parse_fricke("5:0,-1,1,0") == FrickeElement::fricke_involution(OddPrime(5)));
    CHECK(format_fricke(FrickeElement::fricke_involution(OddPrime(7))) == "7:0,-1,1,0");
    CHECK(code_of([] { parse_fricke("4:0,-1,1,0"); }) == ErrorCode::not_odd_prime);
    CHECK(parse_rational("0.125") == make_rational(1, 8));
    CHECK(parse_rational("-2.5") == make_rational(-5, 2));
    CHECK(code_of([] { parse_rational("3/-1x"); }) == ErrorCode::parse_error);
}
