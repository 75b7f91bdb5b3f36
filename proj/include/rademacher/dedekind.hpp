#pragma once

#include "rademacher/arith.hpp"
#include "rademacher/matrix.hpp"

namespace rademacher {

// ((x)) = x - floor(x) - 1/2 for non-integral x, 0 on the integers.
Rational sawtooth(const Rational& x);

struct DedekindOptions {
    // Moduli k below this use the literal sum, larger ones the reciprocity descent.
    long literal_threshold = 64;
};

// s(h, k) = sum_{mu=1}^{k} ((h mu / k)) ((mu / k)) for k >= 1, gcd(h, k) = 1.
// Throws precondition_violation otherwise.
Rational dedekind_sum(const Integer& h, const Integer& k, const DedekindOptions& options = {});

// The literal O(k) sum.
Rational dedekind_sum_literal(const Integer& h, const Integer& k);

// O(log k) evaluation by repeated reciprocity
//   s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk)) / 12.
Rational dedekind_sum_reciprocity(const Integer& h, const Integer& k);

// Rademacher symbol: b/d for c = 0, (a+d)/c - 12 sgn(c) s(d,|c|) otherwise.
// The value is always an integer; a non-integral intermediate raises internal_error.
Integer rademacher_phi(const UnimodularMatrix& g);

}  // namespace rademacher
