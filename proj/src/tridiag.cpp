#include "rademacher/tridiag.hpp"

#include "rademacher/error.hpp"

namespace rademacher {

Inertia inertia_ldl(const EdgeWord& w) {
    Inertia result;
    const std::size_t k = w.size();
    // pivot holds the Schur-complemented diagonal entry at index i.
    Rational pivot;
    bool have_pivot = false;
    std::size_t i = 0;
    while (i < k) {
        if (!have_pivot) pivot = w[i];
        have_pivot = false;
        if (pivot != 0) {
            (sgn(pivot) > 0 ? result.positive : result.negative) += 1;
            if (i + 1 < k) {
                pivot = Rational(w[i + 1]) - 1 / pivot;
                have_pivot = true;
            }
            ++i;
            continue;
        }
        if (i + 1 == k) {
            ++result.zero;
            break;
        }
        // Block [[0, 1], [1, a_{i+1}]] has determinant -1: one eigenvalue of
        // each sign. Its inverse has a zero (2,2) entry, so row i+2 is untouched.
        ++result.positive;
        ++result.negative;
        i += 2;
    }
    return result;
}

Inertia inertia_minors(const EdgeWord& w) {
    Inertia result;
    const std::size_t k = w.size();
    if (k == 0) return result;
    Integer before = 1;  // d_{i-2}
    Integer prev = 1;    // d_{i-1}
    int last_sign = 1;   // sign of the latest nonzero minor
    std::size_t changes = 0;
    for (std::size_t i = 0; i < k; ++i) {
        Integer cur = (i == 0) ? Integer(w[0]) : Integer(w[i] * prev - before);
        before = prev;
        prev = cur;
        // A zero minor sits between minors of opposite sign (d_{i+1} = -d_{i-1}),
        // so it is skipped and the bracketing pair contributes one change.
        int s = sgn(cur);
        if (s == 0) continue;
        if (s != last_sign) ++changes;
        last_sign = s;
    }
    // d_k = 0 means exactly one zero eigenvalue (consecutive minors never both
    // vanish); by interlacing the remaining counts come from d_0..d_{k-1}.
    result.zero = (prev == 0) ? 1 : 0;
    result.negative = changes;
    result.positive = k - result.zero - changes;
    return result;
}

Integer trace(const EdgeWord& w) {
    Integer sum = 0;
    for (const Integer& a : w.exponents) sum += a;
    return sum;
}

long signature(const EdgeWord& w) { return inertia_ldl(w).signature(); }

Integer km_phi(const EdgeWord& w) { return trace(w) - 3 * signature(w); }

}  // namespace rademacher
