#pragma once

// Exact nullspace of integer matrices by fraction-free (Bareiss) elimination.
// Deterministic: pivots are the first nonzero entry in column order, basis
// vectors come out one per free column, scaled primitive-integer with the
// first nonzero entry positive.

#include <vector>

#include "rank2/rational.hpp"

namespace rank2 {

using IntMatrix = std::vector<std::vector<Integer>>;

// basis of { x : M x = 0 } over Q, encoded as primitive integer vectors
std::vector<std::vector<Integer>> nullspace(IntMatrix m);

// membership of v in the rational row space of `rows`
bool in_row_space(IntMatrix rows, const std::vector<Integer>& v);

}  // namespace rank2
