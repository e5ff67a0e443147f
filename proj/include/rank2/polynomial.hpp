#pragma once

// Sparse bivariate polynomials over Q with exact arithmetic.
//
// Exponents are nonnegative; Laurent denominators are carried separately by
// LaurentFraction. Division is exact-or-throws: long division in x1 over
// Q[x2], remainder must vanish. There is deliberately no multivariate gcd
// anywhere in this library.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "rank2/rational.hpp"

namespace rank2 {

struct Monomial {
    int e1 = 0;
    int e2 = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class Polynomial {
public:
    // monomial -> nonzero coefficient; lexicographic key order (e1, then e2)
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;

    static Polynomial constant(const Rational& c);
    static Polynomial constant(long c) { return constant(Rational(c)); }
    static Polynomial variable(int index, int exp = 1);
    static Polynomial monomial(Monomial mono, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_coefficient() const;  // coefficient of the 1-monomial
    Rational constant_value() const;        // value when is_constant()

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    int min_deg1() const;
    int min_deg2() const;
    int max_deg1() const;
    int max_deg2() const;

    // greatest monomial in the term order; polynomial must be nonzero
    const std::pair<const Monomial, Rational>& lex_leading() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) {
        a += b;
        return a;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) {
        a -= b;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(long k) const;  // k >= 0

    // multiply by x1^d1 * x2^d2 (d1, d2 >= 0)
    Polynomial shifted(int d1, int d2) const;

    // (min e1, min e2) over all terms; the largest monomial dividing *this
    Monomial monomial_content() const;
    Polynomial divided_by_monomial(Monomial mono) const;

    // unique positive rational c with (*this)/c integer and primitive
    Rational rational_content() const;
    Polynomial scaled(const Rational& c) const;

    Rational eval(const Rational& v1, const Rational& v2) const;

    // canonical text: terms descending in the monomial order
    std::string str(const char* v1 = "x1", const char* v2 = "x2") const;

    void add_term(Monomial mono, const Rational& c);

private:
    TermMap terms_;
};

// exact quotient q with a = q*b; throws NotDivisible when none exists,
// DivisionByZero when b = 0
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

inline Polynomial poly_pow(const Polynomial& a, long k) { return a.pow(k); }

}  // namespace rank2
