#pragma once

// Cluster-variable normal form: num / (x1^d1 * x2^d2) with num nonzero and
// divisible by neither variable. (d1, d2) is the denominator vector.

#include <string>

#include "rank2/polynomial.hpp"

namespace rank2 {

struct LaurentFraction {
    Polynomial num;
    long d1 = 0;
    long d2 = 0;

    friend bool operator==(const LaurentFraction&, const LaurentFraction&) = default;
};

// factors the largest monomial out of num and folds it into (d1, d2);
// throws ZeroNumerator
LaurentFraction laurent_normalize(Polynomial num, long d1, long d2);

LaurentFraction lf_one();
LaurentFraction lf_var(int index);  // x1 or x2 (d = -1 on that coordinate)

LaurentFraction lf_pow(const LaurentFraction& a, long e);  // e >= 0
LaurentFraction lf_add_one(const LaurentFraction& a);
// exact division; numerator divisibility required (Laurent phenomenon),
// throws NotDivisible otherwise
LaurentFraction lf_div(const LaurentFraction& a, const LaurentFraction& b);

std::string str(const LaurentFraction& a);

}  // namespace rank2
