#pragma once

// Denominator vectors along the tree: the four-branch recurrence (exact, both
// rays), the closed forms per regime, the 4x4 matrix form, growth witnesses,
// and the finite/affine/non-affine classification. All integer arithmetic is
// arbitrary precision; the closed forms for mn >= 5 go through the integer
// linear recurrence u(k+1) = (mn-2)u(k) - u(k-1), never through radicals.

#include <vector>

#include "rank2/engine.hpp"
#include "rank2/rational.hpp"

namespace rank2 {

struct DVector {
    Integer e1;  // x1 exponent
    Integer e2;  // x2 exponent
    friend bool operator==(const DVector&, const DVector&) = default;
};

struct DvRow {
    long position = 0;
    DVector v1;  // d-vector of the first cluster variable
    DVector v2;  // d-vector of the second
};

// positions -k_max .. k_max, ordered ascending
std::vector<DvRow> dvectors_recurrence(long m, long n, long k_max);

struct ClosedQuad {
    DVector d1_even;  // d-vector of var1 at t(2k)
    DVector d2_even;
    DVector d1_odd;   // at t(2k+1)
    DVector d2_odd;
};

// throws UnsupportedRegime when mn <= 3; k >= 1
ClosedQuad dvectors_closed_form(long m, long n, long k);

// same quadruple through the stacked 4x4 matrix power
ClosedQuad dvectors_matrix_form(long m, long n, long k);

// entries of the 2x2 coefficient matrices behind the mn >= 5 closed form,
// power j >= 0; alpha(j) = W1^j, beta(j) = W2^j with W2 = W1^{-1}
Integer closed_form_alpha(long m, long n, int i, long j);
Integer closed_form_beta(long m, long n, int i, long j);

// redundant floating cross-check of the same coefficients via the radical
// expressions, quad precision where available; only trustworthy while the
// true value stays below ~2^60
Integer closed_form_alpha_float(long m, long n, int i, long j);
Integer closed_form_beta_float(long m, long n, int i, long j);

struct ClosedFormParams {
    long m, n;
    long double a;  // mn/2 - 1
    long double b;  // sqrt(mn(mn-4))/2
};

// throws UnsupportedRegime when mn <= 4
ClosedFormParams make_closed_form_params(long m, long n);

enum class AlgebraType { finite, affine, non_affine };
AlgebraType classify(long m, long n);
const char* to_string(AlgebraType t);

// finite witness that every d-vector component diverges: componentwise
// non-decreasing at each step and strictly increasing over every 2-step
// window on positions [3, k_max]; throws UnsupportedRegime when mn <= 3
bool check_growth(long m, long n, long k_max);

// engine denominator exponents == recurrence on both rays up to k_max
bool check_dvector_vs_cluster(long m, long n, long k_max,
                              const WalkLimits& limits = {});

}  // namespace rank2
