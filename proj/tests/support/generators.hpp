#pragma once

// Deterministic random inputs and exhaustive word enumeration for tests.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rademacher/fricke_group.hpp"
#include "rademacher/word_paths.hpp"

namespace rademacher::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline EdgeWord random_word(Rng& rng, std::size_t min_len, std::size_t max_len, long lo, long hi,
                            bool allow_zero = true) {
    std::size_t len = static_cast<std::size_t>(uniform(rng, static_cast<long>(min_len), static_cast<long>(max_len)));
    std::vector<Integer> e;
    e.reserve(len);
    while (e.size() < len) {
        long a = uniform(rng, lo, hi);
        if (a == 0 && !allow_zero) continue;
        e.emplace_back(a);
    }
    return EdgeWord(std::move(e));
}

// Random SL2(Z) element from `steps` multiplications by S or T^k on either side.
inline UnimodularMatrix scrambled_matrix(Rng& rng, int steps, long max_power) {
    UnimodularMatrix g = UnimodularMatrix::identity();
    for (int i = 0; i < steps; ++i) {
        UnimodularMatrix letter = uniform(rng, 0, 2) == 0 ? UnimodularMatrix::S()
                                                          : UnimodularMatrix::T_power(uniform(rng, -max_power, max_power));
        g = uniform(rng, 0, 1) ? g * letter : letter * g;
    }
    if (uniform(rng, 0, 3) == 0) g = -g;
    return g;
}

// Moves g into Gamma_0(p) by right multiplication: first by S when p | d,
// then by (1, 0; t, 1) with t = -c/d mod p, which makes p | c.
inline UnimodularMatrix adapt_to_gamma0(UnimodularMatrix g, OddPrime p) {
    Integer pz = p.as_integer();
    if (mpz_divisible_p(g.d().get_mpz_t(), pz.get_mpz_t())) g = g * UnimodularMatrix::S();
    Integer d_inv;
    Integer d_mod = mod_floor(g.d(), pz);
    mpz_invert(d_inv.get_mpz_t(), d_mod.get_mpz_t(), pz.get_mpz_t());
    Integer t = mod_floor(-g.c() * d_inv, pz);
    return g * UnimodularMatrix(1, 0, t, 1);
}

// Random element of Gamma_0(p): a scrambled matrix adapted as above, then a
// T-power on the left.
inline UnimodularMatrix random_gamma0_matrix(Rng& rng, OddPrime p, int steps, long max_power) {
    UnimodularMatrix g = adapt_to_gamma0(scrambled_matrix(rng, steps, max_power), p);
    return UnimodularMatrix::T_power(uniform(rng, -max_power, max_power)) * g;
}

inline FrickeElement random_gamma0(Rng& rng, OddPrime p, int steps = 6, long max_power = 3) {
    return classify(p, random_gamma0_matrix(rng, p, steps, max_power).as_int_matrix(), DetScale::one);
}

inline FrickeElement random_coset(Rng& rng, OddPrime p, int steps = 6, long max_power = 3) {
    return gamma_plus_mul(FrickeElement::fricke_involution(p), random_gamma0(rng, p, steps, max_power));
}

// Calls f for every word of length <= max_len with entries in [lo, hi]. With
// interior_nonzero, positions strictly between the first and last are nonzero.
inline void for_each_word(std::size_t max_len, long lo, long hi, bool interior_nonzero,
                          const std::function<void(const EdgeWord&)>& f) {
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<long> digits(len, lo);
        auto allowed = [&](std::size_t i, long v) {
            return !(interior_nonzero && v == 0 && i > 0 && i + 1 < len);
        };
        for (std::size_t i = 0; i < len; ++i)
            if (!allowed(i, digits[i])) ++digits[i];
        while (true) {
            std::vector<Integer> e(digits.begin(), digits.end());
            f(EdgeWord(std::move(e)));
            std::size_t i = 0;
            for (; i < len; ++i) {
                ++digits[i];
                if (digits[i] <= hi && !allowed(i, digits[i])) ++digits[i];
                if (digits[i] <= hi) break;
                digits[i] = lo;
                if (!allowed(i, digits[i])) ++digits[i];
            }
            if (i == len) break;
        }
    }
}

}  // namespace rademacher::testing
