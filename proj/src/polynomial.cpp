#include "rank2/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "rank2/errors.hpp"

namespace rank2 {

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    p.add_term({0, 0}, c);
    return p;
}

Polynomial Polynomial::variable(int index, int exp) {
    if (index != 1 && index != 2)
        throw IndexOutOfRange("variable index must be 1 or 2");
    Polynomial p;
    p.add_term(index == 1 ? Monomial{exp, 0} : Monomial{0, exp}, Rational(1));
    return p;
}

Polynomial Polynomial::monomial(Monomial mono, const Rational& c) {
    Polynomial p;
    p.add_term(mono, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational Polynomial::constant_coefficient() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_value() const {
    if (!is_constant())
        throw PreconditionViolated("constant_value on non-constant polynomial");
    return constant_coefficient();
}

int Polynomial::min_deg1() const {
    int d = std::numeric_limits<int>::max();
    for (const auto& [mono, c] : terms_) d = std::min(d, mono.e1);
    return terms_.empty() ? 0 : d;
}

int Polynomial::min_deg2() const {
    int d = std::numeric_limits<int>::max();
    for (const auto& [mono, c] : terms_) d = std::min(d, mono.e2);
    return terms_.empty() ? 0 : d;
}

int Polynomial::max_deg1() const {
    // terms_ is keyed lexicographically by (e1, e2), so the last key has max e1
    return terms_.empty() ? 0 : terms_.rbegin()->first.e1;
}

int Polynomial::max_deg2() const {
    int d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.e2);
    return d;
}

const std::pair<const Monomial, Rational>& Polynomial::lex_leading() const {
    if (terms_.empty()) throw PreconditionViolated("lex_leading of zero polynomial");
    return *terms_.rbegin();
}

void Polynomial::add_term(Monomial mono, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    const Polynomial& outer = a.term_count() <= b.term_count() ? a : b;
    const Polynomial& inner = a.term_count() <= b.term_count() ? b : a;
    Rational prod;
    for (const auto& [ma, ca] : outer.terms_) {
        for (const auto& [mb, cb] : inner.terms_) {
            prod = ca * cb;
            r.add_term({ma.e1 + mb.e1, ma.e2 + mb.e2}, prod);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::pow(long k) const {
    if (k < 0) throw PreconditionViolated("pow exponent must be >= 0");
    Polynomial result = constant(Rational(1));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::shifted(int d1, int d2) const {
    if (d1 < 0 || d2 < 0) throw PreconditionViolated("shift exponents must be >= 0");
    Polynomial r;
    for (const auto& [mono, c] : terms_)
        r.terms_.emplace(Monomial{mono.e1 + d1, mono.e2 + d2}, c);
    return r;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return {0, 0};
    return {min_deg1(), min_deg2()};
}

Polynomial Polynomial::divided_by_monomial(Monomial mono) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.e1 < mono.e1 || m.e2 < mono.e2)
            throw NotDivisible("monomial does not divide every term");
        r.terms_.emplace(Monomial{m.e1 - mono.e1, m.e2 - mono.e2}, c);
    }
    return r;
}

Rational Polynomial::rational_content() const {
    if (terms_.empty()) return Rational(0);
    Integer gcd_num = 0, lcm_den = 1;
    for (const auto& [mono, c] : terms_) {
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(gcd_num, lcm_den);
    content.canonicalize();
    return content;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [mono, coeff] : terms_) r.terms_.emplace(mono, coeff * c);
    return r;
}

Rational Polynomial::eval(const Rational& v1, const Rational& v2) const {
    Rational acc(0);
    std::map<int, Rational> p1, p2;
    auto power = [](std::map<int, Rational>& cache, const Rational& v, int e) {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        Rational r(1);
        mpz_pow_ui(r.get_num().get_mpz_t(), v.get_num().get_mpz_t(), e);
        mpz_pow_ui(r.get_den().get_mpz_t(), v.get_den().get_mpz_t(), e);
        r.canonicalize();
        cache.emplace(e, r);
        return r;
    };
    for (const auto& [mono, c] : terms_)
        acc += c * power(p1, v1, mono.e1) * power(p2, v2, mono.e2);
    return acc;
}

namespace {

using UniPoly = std::map<int, Rational>;  // x2 exponent -> coefficient

// exact quotient in Q[x2]; throws NotDivisible if the remainder is nonzero
UniPoly uni_exact_div(UniPoly a, const UniPoly& b) {
    UniPoly q;
    const int db = b.rbegin()->first;
    const Rational& lb = b.rbegin()->second;
    while (!a.empty()) {
        const int da = a.rbegin()->first;
        if (da < db) throw NotDivisible("univariate division leaves a remainder");
        Rational qc = a.rbegin()->second / lb;
        q.emplace(da - db, qc);
        for (const auto& [e, c] : b) {
            const int te = e + da - db;
            auto it = a.find(te);
            if (it == a.end()) {
                a.emplace(te, -qc * c);
            } else {
                it->second -= qc * c;
                if (it->second == 0) a.erase(it);
            }
        }
    }
    return q;
}

std::map<int, UniPoly> group_by_e1(const Polynomial& p) {
    std::map<int, UniPoly> g;
    for (const auto& [mono, c] : p.terms()) g[mono.e1].emplace(mono.e2, c);
    return g;
}

}  // namespace

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("exact_div by zero polynomial");
    Polynomial q;
    if (a.is_zero()) return q;

    auto ga = group_by_e1(a);
    const auto gb = group_by_e1(b);
    const int db = gb.rbegin()->first;
    const UniPoly& lead_b = gb.rbegin()->second;

    while (!ga.empty()) {
        const int da = ga.rbegin()->first;
        if (da < db) throw NotDivisible("x1-degree dropped below divisor");
        // If b | a, the x1-leading coefficient of the remainder is divisible
        // by b's at every step.
        UniPoly qc = uni_exact_div(ga.rbegin()->second, lead_b);
        const int shift = da - db;
        for (const auto& [e2, c] : qc) q.add_term({shift, e2}, c);
        for (const auto& [e1, ub] : gb) {
            UniPoly& target = ga[e1 + shift];
            for (const auto& [eb, cb] : ub) {
                for (const auto& [eq, cq] : qc) {
                    const int te = eb + eq;
                    auto it = target.find(te);
                    if (it == target.end()) {
                        target.emplace(te, -cb * cq);
                    } else {
                        it->second -= cb * cq;
                        if (it->second == 0) target.erase(it);
                    }
                }
            }
            if (target.empty()) ga.erase(e1 + shift);
        }
    }
    return q;
}

namespace {

std::string term_string(const Monomial& mono, const Rational& coeff,
                        const char* v1, const char* v2) {
    Rational a = coeff > 0 ? coeff : Rational(-coeff);
    std::string vars;
    if (mono.e1 > 0) {
        vars += v1;
        if (mono.e1 != 1) vars += "^" + std::to_string(mono.e1);
    }
    if (mono.e2 > 0) {
        if (!vars.empty()) vars += "*";
        vars += v2;
        if (mono.e2 != 1) vars += "^" + std::to_string(mono.e2);
    }
    if (vars.empty()) return a.get_str();
    if (a == 1) return vars;
    return a.get_str() + "*" + vars;
}

}  // namespace

std::string Polynomial::str(const char* v1, const char* v2) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool neg = it->second < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_string(it->first, it->second, v1, v2);
    }
    return out;
}

}  // namespace rank2
