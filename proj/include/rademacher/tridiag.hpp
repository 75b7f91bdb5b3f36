#pragma once

// The symmetric tridiagonal matrix M_w with diagonal (a1, ..., ak) and unit
// off-diagonals, its trace and exact inertia, and the geometric Rademacher
// symbol trace - 3 * signature.

#include "rademacher/word_paths.hpp"

namespace rademacher {

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    long signature() const noexcept {
        return static_cast<long>(positive) - static_cast<long>(negative);
    }
    std::size_t rank() const noexcept { return positive + negative; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Symmetric elimination over the rationals: 1x1 pivots, switching to a 2x2
// block [[0, 1], [1, x]] whenever a pivot vanishes.
Inertia inertia_ldl(const EdgeWord& w);

// Sign changes in the leading principal minors d_i = a_i d_{i-1} - d_{i-2}.
Inertia inertia_minors(const EdgeWord& w);

Integer trace(const EdgeWord& w);
long signature(const EdgeWord& w);
Integer km_phi(const EdgeWord& w);

}  // namespace rademacher
