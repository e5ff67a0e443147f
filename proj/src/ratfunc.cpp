#include "rank2/ratfunc.hpp"

#include <algorithm>
#include <map>

#include "rank2/errors.hpp"

namespace rank2 {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    const Monomial cn = num_.monomial_content();
    const Monomial cd = den_.monomial_content();
    const Monomial common{std::min(cn.e1, cd.e1), std::min(cn.e2, cd.e2)};
    if (common != Monomial{0, 0}) {
        num_ = num_.divided_by_monomial(common);
        den_ = den_.divided_by_monomial(common);
    }
    const Rational scale = rational_gcd(num_.rational_content(), den_.rational_content());
    if (scale != 1) {
        const Rational inv = 1 / scale;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    if (den_.lex_leading().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction RationalFunction::from_poly(Polynomial p) {
    return RationalFunction(std::move(p), Polynomial::constant(1));
}

RationalFunction RationalFunction::constant(const Rational& c) {
    return from_poly(Polynomial::constant(c));
}

RationalFunction RationalFunction::var(int index) {
    return from_poly(Polynomial::variable(index));
}

bool RationalFunction::is_constant() const {
    return num_.is_constant() && den_.is_constant();
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw PreconditionViolated("constant_value of non-constant");
    if (num_.is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(long k) const {
    if (k < 0) {
        if (is_zero()) throw DivisionByZero("zero to a negative power");
        return RationalFunction(den_.pow(-k), num_.pow(-k));
    }
    return RationalFunction(num_.pow(k), den_.pow(k));
}

bool ratfunc_equal(const RationalFunction& f, const RationalFunction& g) {
    return f.num() * g.den() == g.num() * f.den();
}

namespace {

// f as a polynomial in x1 whose coefficients are polynomials in x2,
// evaluated at (s1, s2) by two nested Horner passes
RationalFunction eval_poly_at(const Polynomial& p, const RationalFunction& s1,
                              const RationalFunction& s2) {
    if (p.is_zero()) return RationalFunction();
    std::map<int, std::map<int, Rational>> groups;
    for (const auto& [mono, c] : p.terms()) groups[mono.e1][mono.e2] = c;

    auto eval_uni = [&s2](const std::map<int, Rational>& u) {
        RationalFunction acc;
        int prev = -1;
        for (auto it = u.rbegin(); it != u.rend(); ++it) {
            if (prev >= 0)
                for (int e = prev; e > it->first; --e) acc = acc * s2;
            acc = acc + RationalFunction::constant(it->second);
            prev = it->first;
        }
        for (int e = prev; e > 0; --e) acc = acc * s2;
        return acc;
    };

    RationalFunction acc;
    int prev = -1;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        if (prev >= 0)
            for (int e = prev; e > it->first; --e) acc = acc * s1;
        acc = acc + eval_uni(it->second);
        prev = it->first;
    }
    for (int e = prev; e > 0; --e) acc = acc * s1;
    return acc;
}

}  // namespace

RationalFunction ratfunc_substitute(const RationalFunction& f,
                                    const RationalFunction& s1,
                                    const RationalFunction& s2) {
    RationalFunction den = eval_poly_at(f.den(), s1, s2);
    if (den.is_zero())
        throw DenominatorVanishes("denominator vanishes under substitution");
    RationalFunction num = eval_poly_at(f.num(), s1, s2);
    return num / den;
}

Rational ratfunc_eval(const RationalFunction& f, const Rational& a, const Rational& b) {
    const Rational d = f.den().eval(a, b);
    if (d == 0) throw DivisionByZero("denominator vanishes at the point");
    return f.num().eval(a, b) / d;
}

RationalFunction to_ratfunc(const LaurentFraction& lf) {
    const int p1 = static_cast<int>(std::max(lf.d1, 0L));
    const int p2 = static_cast<int>(std::max(lf.d2, 0L));
    Polynomial num = lf.num.shifted(static_cast<int>(p1 - lf.d1),
                                    static_cast<int>(p2 - lf.d2));
    return RationalFunction(std::move(num), Polynomial::monomial({p1, p2}, Rational(1)));
}

LaurentFraction to_laurent(const RationalFunction& f) {
    if (f.is_zero()) throw ZeroNumerator("zero has no Laurent normal form here");
    const Polynomial& den = f.den();
    const Monomial mono = den.monomial_content();
    Polynomial core = den.divided_by_monomial(mono);
    Polynomial num = f.num();
    if (!core.is_constant()) {
        try {
            num = exact_div(num, core);
        } catch (const NotDivisible&) {
            throw NotLaurent("value is not a Laurent polynomial");
        }
    } else {
        num = num.scaled(1 / core.constant_value());
    }
    return laurent_normalize(std::move(num), mono.e1, mono.e2);
}

std::string RationalFunction::str() const {
    if (num_.is_zero()) return "0";
    const std::string ns = num_.str();
    if (den_ == Polynomial::constant(1)) return ns;

    const std::string ds = den_.str();
    const bool num_parens = num_.term_count() > 1;
    // a denominator prints bare only when it is a single positive-integer
    // constant or a bare variable power; anything else would re-associate
    bool den_atom = false;
    if (den_.term_count() == 1) {
        const auto& [mono, c] = den_.lex_leading();
        const bool one_var = (mono.e1 > 0) != (mono.e2 > 0);
        den_atom = (c == 1 && one_var) ||
                   (mono == Monomial{0, 0} && c > 0 && is_integer(c));
    }
    std::string out = num_parens ? "(" + ns + ")" : ns;
    out += "/";
    out += den_atom ? ds : "(" + ds + ")";
    return out;
}

}  // namespace rank2
