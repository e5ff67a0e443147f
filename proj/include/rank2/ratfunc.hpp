#pragma once

// Rational functions as num/den pairs. Equality is by cross-multiplication;
// no gcd reduction ever happens. Canonical form: common monomial content
// removed, the pair jointly scaled to integer-primitive coefficients, and the
// denominator's lexicographically greatest term positive.

#include <string>
#include <utility>

#include "rank2/laurent.hpp"
#include "rank2/polynomial.hpp"

namespace rank2 {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    // throws DivisionByZero when den = 0
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction from_poly(Polynomial p);
    static RationalFunction constant(const Rational& c);
    static RationalFunction var(int index);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const;
    Rational constant_value() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
    // throws DivisionByZero
    friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);

    RationalFunction pow(long k) const;  // negative k inverts

    std::string str() const;

private:
    Polynomial num_;
    Polynomial den_;
};

// f.num*g.den == g.num*f.den, no reduction needed
bool ratfunc_equal(const RationalFunction& f, const RationalFunction& g);

// f(s1, s2) by Horner evaluation over rational-function arithmetic;
// throws DenominatorVanishes when den(s1,s2) is identically zero
RationalFunction ratfunc_substitute(const RationalFunction& f,
                                    const RationalFunction& s1,
                                    const RationalFunction& s2);

// numeric evaluation; throws DivisionByZero when den(a,b) = 0
Rational ratfunc_eval(const RationalFunction& f, const Rational& a, const Rational& b);

RationalFunction to_ratfunc(const LaurentFraction& lf);

// reduced Laurent form of a rational function whose value is a Laurent
// polynomial over a monomial; throws NotLaurent otherwise
LaurentFraction to_laurent(const RationalFunction& f);

}  // namespace rank2
