#include "rank2/multipoly.hpp"

#include <algorithm>

#include "rank2/errors.hpp"

namespace rank2 {

MultiPoly MultiPoly::constant(long arity, const Rational& c) {
    MultiPoly p(arity);
    p.add_term(std::vector<int>(arity, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(long arity, long index) {
    if (index < 1 || index > arity)
        throw IndexOutOfRange("variable index outside arity");
    MultiPoly p(arity);
    std::vector<int> e(arity, 0);
    e[index - 1] = 1;
    p.add_term(std::move(e), Rational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void MultiPoly::add_term(std::vector<int> exps, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e(arity_);
            for (long i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(arity_);
    if (c == 0) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

MultiPoly MultiPoly::pow(long k) const {
    if (k < 0) throw PreconditionViolated("MultiPoly::pow exponent must be >= 0");
    MultiPoly result = constant(arity_, Rational(1));
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

bool MultiPoly::is_symmetric() const {
    for (long i = 0; i + 1 < arity_; ++i) {
        MultiPoly swapped(arity_);
        for (const auto& [e, c] : terms_) {
            std::vector<int> se = e;
            std::swap(se[i], se[i + 1]);
            swapped.add_term(std::move(se), c);
        }
        if (swapped.terms_ != terms_) return false;
    }
    return true;
}

RationalFunction MultiPoly::eval(const std::vector<RationalFunction>& values) const {
    if (static_cast<long>(values.size()) != arity_)
        throw PreconditionViolated("MultiPoly::eval arity mismatch");
    RationalFunction acc;
    for (const auto& [e, c] : terms_) {
        RationalFunction t = RationalFunction::constant(c);
        for (long i = 0; i < arity_; ++i)
            if (e[i] != 0) t = t * values[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

}  // namespace rank2
