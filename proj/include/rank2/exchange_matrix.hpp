#pragma once

// General square exchange matrices with entrywise mutation, used for the
// invariant-mutation-rule check on rank >= 3 matrices. The rank-2 engine
// never builds these.

#include <vector>

#include "rank2/rational.hpp"

namespace rank2 {

class ExchangeMatrix {
public:
    ExchangeMatrix(long size, std::vector<Integer> entries);
    static ExchangeMatrix from_rows(const std::vector<std::vector<long>>& rows);

    long size() const { return size_; }
    const Integer& at(long i, long j) const;  // 0-based
    Integer& at(long i, long j);

    friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
    ExchangeMatrix negated() const;

private:
    long size_;
    std::vector<Integer> entries_;  // row-major
};

// entrywise mutation in direction k (1-based); an involution;
// throws IndexOutOfRange
ExchangeMatrix matrix_mutate(const ExchangeMatrix& b, long k);

// existence of a positive integer diagonal D with D*B skew-symmetric
bool is_skew_symmetrizable(const ExchangeMatrix& b);

struct ImrReport {
    bool imr = false;        // every matrix reached stayed in {B, -B}
    bool exhausted = false;  // depth limit reached without a counterexample
    long matrices_seen = 0;
};

// breadth-first over all direction sequences up to `depth`
ImrReport check_imr(const ExchangeMatrix& b, long depth);

}  // namespace rank2
