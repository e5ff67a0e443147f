#pragma once

// Mutation invariants of the rank-2 algebras: verification of a candidate
// against both one-step substitutions, construction from a symmetric
// combiner and a kernel function over the finite cluster list, Laurent
// decomposition for the isolated (0,0) case, the degree-doubling necessary
// condition, and the bounded-degree linear search for Laurent invariants.

#include <optional>
#include <vector>

#include "rank2/engine.hpp"
#include "rank2/multipoly.hpp"
#include "rank2/polynomial.hpp"
#include "rank2/ratfunc.hpp"

namespace rank2 {

struct LaurentForm {
    long s = 0;           // value = numerator / (x1^s x2^t)
    long t = 0;
    Polynomial numerator; // divisible by neither variable
};

struct InvariantCandidate {
    RationalFunction value;
    std::optional<LaurentForm> laurent;
};

// T == T o M~_1 and T == T o M~_2, exactly; throws ConstantInput
bool verify_invariant(const RationalFunction& T, long m, long n);

class SymmetricCombiner {
public:
    // e_k(X1..Xm) * scale
    static SymmetricCombiner elementary(long k, Rational scale = Rational(1));
    // (X1^k + ... + Xm^k) * scale
    static SymmetricCombiner power_sum(long k, Rational scale = Rational(1));
    // arbitrary symmetric polynomial; throws NotSymmetric
    static SymmetricCombiner explicit_poly(MultiPoly phi);

    RationalFunction combine(const std::vector<RationalFunction>& values) const;

private:
    SymmetricCombiner() = default;
    enum class Kind { Elementary, PowerSum, Explicit };
    Kind kind_ = Kind::PowerSum;
    long index_ = 1;
    Rational scale_ = 1;
    std::optional<MultiPoly> poly_;
};

// evaluates F on every labeled cluster and combines with phi;
// throws InfiniteType outside the finite regime, DenominatorVanishes if F
// cannot be evaluated on some cluster
RationalFunction construct_invariant(long m, long n, const RationalFunction& F,
                                     const SymmetricCombiner& phi);

// univariate: f(x) = f(2/x) Laurent in exactly one of the variables;
// returns g with f(x) = g(x + 2/x), printed in the variable X.
// throws NotSymmetric / NotLaurent / ConstantInput
Polynomial decompose_half_invariant(const RationalFunction& f, int var);
int detect_single_variable(const RationalFunction& f);  // 1 or 2; throws NotLaurent... see impl

// G with T(x1,x2) = G(x1 + 2/x1, x2 + 2/x2) for Laurent invariants of the
// (0,0) algebra; throws NotInvariant / NotLaurent
Polynomial decompose_a1a1(const RationalFunction& T);

// max x1-degree of the numerator == 2s and max x2-degree == 2t;
// throws MissingLaurentForm
bool check_degree_condition(const InvariantCandidate& cand);

// basis of Laurent invariants with numerator support in [0,2s]x[0,2t] over
// denominator x1^s x2^t and the (s,t) coefficient pinned to zero; every
// candidate is verified and carries its reduced Laurent form
std::vector<InvariantCandidate> search_laurent_invariants(long m, long n, long s,
                                                          long t);

}  // namespace rank2
