#pragma once

// Seeds and mutations along the 2-regular tree
//
//   ... --2-- t(-1) --2?-- ...   concretely:
//   ... --1-- t(-2) --2-- t(-1)? ...
//
// The tree is laid out as ... t(-2) --1-- t(-1) --2-- t0 --1-- t1 --2-- t2 ...
// so an edge between t(2k) and t(2k+1) carries label 1 and an edge between
// t(2k-1) and t(2k) carries label 2. A walk word applies mutations
// left-to-right starting from t0.
//
// M-actions substitute a one-step mutation image into both components of a
// pair of rational functions; mutations and M-actions generate the same
// clusters, which check_mutation_maction_equivalence verifies degree by
// degree.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rank2/laurent.hpp"
#include "rank2/ratfunc.hpp"

namespace rank2 {

struct ExchangeData {
    long m = 0;
    long n = 0;
    int sign = +1;  // sign * [[0, m], [-n, 0]]

    friend bool operator==(const ExchangeData&, const ExchangeData&) = default;
};

struct Seed {
    LaurentFraction var1;
    LaurentFraction var2;
    ExchangeData exchange;
    long position = 0;  // vertex index on the tree, t0 = 0
};

// labeled-seed equality: ordered pair + exchange sign (position ignored)
bool same_labeled_seed(const Seed& a, const Seed& b);

// optional ceiling on numerator term counts; mutations beyond it throw
// ResourceExhausted. 0 means unlimited.
struct WalkLimits {
    std::size_t max_terms = 0;
};

Seed initial_seed(long m, long n);
Seed mutate_seed(const Seed& s, int direction, const WalkLimits& limits = {});

// all intermediate seeds, initial first; word letters are '1'/'2'
std::vector<Seed> walk(long m, long n, std::string_view word,
                       const WalkLimits& limits = {});

struct ClusterEnumeration {
    std::optional<long> period;
    std::vector<Seed> labeled_clusters;  // t0, t1, ... up to period or max_steps
};

ClusterEnumeration enumerate_clusters(long m, long n, long max_steps,
                                      const WalkLimits& limits = {});

using RfPair = std::pair<RationalFunction, RationalFunction>;

// substitute x1 -> (x2^n+1)/x1 (direction 1) or x2 -> (x1^m+1)/x2
// (direction 2) into both components
RfPair m_action(const RfPair& pair, int direction, long m, long n);

// the same substitution acting on Laurent-normal pairs, with the exact
// cancellation the Laurent property guarantees
std::pair<LaurentFraction, LaurentFraction> m_action_laurent(
    const std::pair<LaurentFraction, LaurentFraction>& pair, int direction,
    long m, long n, const WalkLimits& limits = {});

struct EquivalenceReport {
    bool ok = true;
    std::string counterexample;  // set when ok is false
};

// checks, for every k <= k_max and (i,j) in {(1,2),(2,1)}:
//   mu_i (mu_j mu_i)^k (x1,x2) == M~_i (M~_j M~_i)^k (x1,x2)
//   (mu_i mu_j)^k (x1,x2)      == (M~_j M~_i)^k (x1,x2)
// componentwise by ratfunc_equal
EquivalenceReport check_mutation_maction_equivalence(long m, long n, long k_max,
                                                     const WalkLimits& limits = {});

}  // namespace rank2
