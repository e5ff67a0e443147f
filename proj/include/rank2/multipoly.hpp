#pragma once

// Polynomials in an arbitrary number of variables, only as combiners for
// values living in Q(x1,x2). Kept deliberately tiny.

#include <map>
#include <vector>

#include "rank2/ratfunc.hpp"

namespace rank2 {

class MultiPoly {
public:
    explicit MultiPoly(long arity) : arity_(arity) {}

    static MultiPoly constant(long arity, const Rational& c);
    static MultiPoly variable(long arity, long index);  // 1-based

    long arity() const { return arity_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    void add_term(std::vector<int> exps, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(long k) const;  // k >= 0

    // invariant under every transposition of adjacent variables
    bool is_symmetric() const;

    RationalFunction eval(const std::vector<RationalFunction>& values) const;

private:
    long arity_;
    std::map<std::vector<int>, Rational> terms_;
};

}  // namespace rank2
