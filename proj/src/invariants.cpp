#include "rank2/invariants.hpp"

#include <algorithm>
#include <map>

#include "rank2/dvector.hpp"
#include "rank2/errors.hpp"
#include "rank2/linalg.hpp"

namespace rank2 {

namespace {

RationalFunction mutation_image(int direction, long m, long n) {
    const RationalFunction x1 = RationalFunction::var(1);
    const RationalFunction x2 = RationalFunction::var(2);
    const RationalFunction one = RationalFunction::constant(1);
    return direction == 1 ? (x2.pow(n) + one) / x1 : (x1.pow(m) + one) / x2;
}

}  // namespace

bool verify_invariant(const RationalFunction& T, long m, long n) {
    if (T.is_constant()) throw ConstantInput("invariants must be non-constant");
    const RationalFunction x1 = RationalFunction::var(1);
    const RationalFunction x2 = RationalFunction::var(2);
    const RationalFunction im1 = ratfunc_substitute(T, mutation_image(1, m, n), x2);
    if (!ratfunc_equal(T, im1)) return false;
    const RationalFunction im2 = ratfunc_substitute(T, x1, mutation_image(2, m, n));
    return ratfunc_equal(T, im2);
}

SymmetricCombiner SymmetricCombiner::elementary(long k, Rational scale) {
    if (k < 1) throw PreconditionViolated("elementary symmetric index must be >= 1");
    SymmetricCombiner c;
    c.kind_ = Kind::Elementary;
    c.index_ = k;
    c.scale_ = std::move(scale);
    return c;
}

SymmetricCombiner SymmetricCombiner::power_sum(long k, Rational scale) {
    if (k < 1) throw PreconditionViolated("power sum index must be >= 1");
    SymmetricCombiner c;
    c.kind_ = Kind::PowerSum;
    c.index_ = k;
    c.scale_ = std::move(scale);
    return c;
}

SymmetricCombiner SymmetricCombiner::explicit_poly(MultiPoly phi) {
    if (!phi.is_symmetric())
        throw NotSymmetric("combiner is not a symmetric polynomial");
    SymmetricCombiner c;
    c.kind_ = Kind::Explicit;
    c.poly_ = std::move(phi);
    return c;
}

RationalFunction SymmetricCombiner::combine(
    const std::vector<RationalFunction>& values) const {
    switch (kind_) {
        case Kind::Elementary: {
            if (index_ > static_cast<long>(values.size()))
                throw PreconditionViolated("elementary index exceeds value count");
            // coefficients of prod (1 + v_i z) up to z^index
            std::vector<RationalFunction> coeff(index_ + 1);
            coeff[0] = RationalFunction::constant(1);
            long filled = 0;
            for (const auto& v : values) {
                filled = std::min<long>(filled + 1, index_);
                for (long k = filled; k >= 1; --k)
                    coeff[k] = coeff[k] + coeff[k - 1] * v;
            }
            return coeff[index_] * RationalFunction::constant(scale_);
        }
        case Kind::PowerSum: {
            RationalFunction acc;
            for (const auto& v : values) acc = acc + v.pow(index_);
            return acc * RationalFunction::constant(scale_);
        }
        case Kind::Explicit: {
            if (poly_->arity() != static_cast<long>(values.size()))
                throw PreconditionViolated("combiner arity mismatch");
            return poly_->eval(values);
        }
    }
    throw PreconditionViolated("corrupt combiner");
}

RationalFunction construct_invariant(long m, long n, const RationalFunction& F,
                                     const SymmetricCombiner& phi) {
    if (classify(m, n) != AlgebraType::finite)
        throw InfiniteType("construction needs a finite cluster list (mn <= 3)");
    const ClusterEnumeration enumeration = enumerate_clusters(m, n, 16);
    std::vector<RationalFunction> values;
    values.reserve(enumeration.labeled_clusters.size());
    for (const Seed& s : enumeration.labeled_clusters)
        values.push_back(
            ratfunc_substitute(F, to_ratfunc(s.var1), to_ratfunc(s.var2)));
    return phi.combine(values);
}

namespace {

using UniLaurent = std::map<int, Rational>;  // exponent -> coefficient

// coefficients of F_k with F_0 = 2, F_1 = X, F_k = X*F_{k-1} - 2*F_{k-2};
// F_k(x + 2/x) = x^k + (2/x)^k
std::vector<UniLaurent> f_basis(int up_to) {
    std::vector<UniLaurent> f(std::max(up_to + 1, 2));
    f[0] = {{0, Rational(2)}};
    f[1] = {{1, Rational(1)}};
    for (int k = 2; k <= up_to; ++k) {
        UniLaurent next;
        for (const auto& [e, c] : f[k - 1]) next[e + 1] += c;
        for (const auto& [e, c] : f[k - 2]) next[e] -= 2 * c;
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        f[k] = std::move(next);
    }
    return f;
}

void check_half_symmetry(const UniLaurent& c) {
    for (const auto& [e, coeff] : c) {
        if (e <= 0) continue;
        Rational expect = coeff;
        for (int i = 0; i < e; ++i) expect *= 2;
        auto it = c.find(-e);
        if (it == c.end() || it->second != expect)
            throw NotSymmetric("coefficients violate f(x) = f(2/x)");
    }
    for (const auto& [e, coeff] : c)
        if (e < 0 && c.find(-e) == c.end())
            throw NotSymmetric("coefficients violate f(x) = f(2/x)");
}

// g with f = g(x + 2/x) for a symmetric univariate Laurent coefficient map
UniLaurent decompose_uni(const UniLaurent& c) {
    check_half_symmetry(c);
    const int top = c.empty() ? 0 : c.rbegin()->first;
    const auto basis = f_basis(std::max(top, 1));
    UniLaurent g;
    for (const auto& [e, coeff] : c) {
        if (e < 0) continue;
        if (e == 0) {
            g[0] += coeff;
            continue;
        }
        for (const auto& [d, fc] : basis[e]) g[d] += coeff * fc;
    }
    std::erase_if(g, [](const auto& kv) { return kv.second == 0; });
    return g;
}

}  // namespace

int detect_single_variable(const RationalFunction& f) {
    const bool has1 = f.num().max_deg1() > 0 || f.den().max_deg1() > 0;
    const bool has2 = f.num().max_deg2() > 0 || f.den().max_deg2() > 0;
    if (has1 == has2)
        throw PreconditionViolated(
            has1 ? "expression uses both variables" : "expression is constant");
    return has1 ? 1 : 2;
}

Polynomial decompose_half_invariant(const RationalFunction& f, int var) {
    if (var != 1 && var != 2) throw IndexOutOfRange("variable index must be 1 or 2");
    if (f.is_constant()) throw ConstantInput("nothing to decompose in a constant");
    const int other = 3 - var;
    const auto other_deg = [other](const Polynomial& p) {
        return other == 1 ? p.max_deg1() : p.max_deg2();
    };
    if (other_deg(f.num()) > 0 || other_deg(f.den()) > 0)
        throw PreconditionViolated("expression is not univariate in the given variable");

    // f(x) = f(2/x), checked symbolically
    const RationalFunction two_over =
        RationalFunction::constant(2) / RationalFunction::var(var);
    const RationalFunction sub =
        var == 1 ? ratfunc_substitute(f, two_over, RationalFunction::var(2))
                 : ratfunc_substitute(f, RationalFunction::var(1), two_over);
    if (!ratfunc_equal(f, sub)) throw NotSymmetric("f(x) != f(2/x)");

    const LaurentFraction lf = to_laurent(f);
    UniLaurent c;
    for (const auto& [mono, coeff] : lf.num.terms()) {
        const long e = var == 1 ? mono.e1 - lf.d1 : mono.e2 - lf.d2;
        c[static_cast<int>(e)] = coeff;
    }
    Polynomial g;
    for (const auto& [d, coeff] : decompose_uni(c)) g.add_term({d, 0}, coeff);
    return g;
}

Polynomial decompose_a1a1(const RationalFunction& T) {
    if (!verify_invariant(T, 0, 0))  // ConstantInput propagates
        throw NotInvariant("not a mutation invariant of the (0,0) algebra");
    const LaurentFraction lf = to_laurent(T);

    // x1-exponent -> (x2-exponent -> coefficient)
    std::map<int, UniLaurent> levels;
    for (const auto& [mono, coeff] : lf.num.terms())
        levels[static_cast<int>(mono.e1 - lf.d1)]
              [static_cast<int>(mono.e2 - lf.d2)] = coeff;

    // x1-symmetry holds levelwise: level(-k) == 2^k * level(k)
    for (const auto& [e, lvl] : levels) {
        if (e <= 0) continue;
        Rational pw(1);
        for (int i = 0; i < e; ++i) pw *= 2;
        auto it = levels.find(-e);
        UniLaurent expect;
        for (const auto& [e2, c] : lvl) expect[e2] = c * pw;
        if (it == levels.end() || it->second != expect)
            throw NotSymmetric("invariant is not symmetric in x1");
    }

    const int top = levels.empty() ? 0 : levels.rbegin()->first;
    const auto basis = f_basis(std::max(top, 1));

    // P: X1-power -> x2-Laurent coefficient
    std::map<int, UniLaurent> p;
    for (const auto& [e, lvl] : levels) {
        if (e < 0) continue;
        if (e == 0) {
            for (const auto& [e2, c] : lvl) p[0][e2] += c;
            continue;
        }
        for (const auto& [d, fc] : basis[e])
            for (const auto& [e2, c] : lvl) p[d][e2] += c * fc;
    }

    Polynomial g;
    for (auto& [d, lvl] : p) {
        std::erase_if(lvl, [](const auto& kv) { return kv.second == 0; });
        for (const auto& [e, coeff] : decompose_uni(lvl))
            g.add_term({d, e}, coeff);
    }
    return g;
}

bool check_degree_condition(const InvariantCandidate& cand) {
    if (!cand.laurent)
        throw MissingLaurentForm("candidate carries no Laurent form");
    const LaurentForm& lf = *cand.laurent;
    return lf.numerator.max_deg1() == 2 * lf.s && lf.numerator.max_deg2() == 2 * lf.t;
}

std::vector<InvariantCandidate> search_laurent_invariants(long m, long n, long s,
                                                          long t) {
    if (s < 1 || t < 1) throw PreconditionViolated("s, t must be >= 1");

    std::vector<Monomial> unknowns;
    for (int i = 0; i <= 2 * s; ++i)
        for (int j = 0; j <= 2 * t; ++j)
            if (!(i == s && j == t)) unknowns.push_back({i, j});

    Polynomial b1 = Polynomial::variable(2, static_cast<int>(n)) + Polynomial::constant(1);
    Polynomial b2 = Polynomial::variable(1, static_cast<int>(m)) + Polynomial::constant(1);
    if (n == 0) b1 = Polynomial::constant(2);
    if (m == 0) b2 = Polynomial::constant(2);

    std::vector<Polynomial> pow1(2 * s + 1), pow2(2 * t + 1);
    pow1[0] = Polynomial::constant(1);
    for (long i = 1; i <= 2 * s; ++i) pow1[i] = pow1[i - 1] * b1;
    pow2[0] = Polynomial::constant(1);
    for (long j = 1; j <= 2 * t; ++j) pow2[j] = pow2[j - 1] * b2;

    // per unknown, the polynomial multiplying lambda_{ij} in each cleared
    // invariance condition
    std::vector<Polynomial> cond1(unknowns.size()), cond2(unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const auto [i, j] = unknowns[u];
        Polynomial c1 = pow1[i].shifted(static_cast<int>(3 * s - i), 0) -
                        pow1[s].shifted(static_cast<int>(s + i), 0);
        cond1[u] = c1.shifted(0, static_cast<int>(t) + j);
        Polynomial c2 = pow2[j].shifted(0, static_cast<int>(3 * t - j)) -
                        pow2[t].shifted(0, static_cast<int>(t) + j);
        cond2[u] = c2.shifted(static_cast<int>(s) + i, 0);
    }

    auto block_rows = [&](const std::vector<Polynomial>& cond, IntMatrix& out) {
        std::map<Monomial, std::vector<Rational>> rows;  // ascending keys
        for (std::size_t u = 0; u < cond.size(); ++u)
            for (const auto& [mono, c] : cond[u].terms()) {
                auto& row = rows[mono];
                row.resize(cond.size());
                row[u] = c;
            }
        // descending monomial order
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
            std::vector<Integer> row(cond.size());
            it->second.resize(cond.size());
            for (std::size_t u = 0; u < cond.size(); ++u) {
                const Rational& q = it->second[u];
                if (q.get_den() != 1)
                    throw PreconditionViolated("search matrix must be integral");
                row[u] = q.get_num();
            }
            out.push_back(std::move(row));
        }
    };

    IntMatrix matrix;
    block_rows(cond1, matrix);
    block_rows(cond2, matrix);

    std::vector<InvariantCandidate> out;
    for (const auto& lambda : nullspace(std::move(matrix))) {
        Polynomial num;
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            if (lambda[u] != 0) num.add_term(unknowns[u], Rational(lambda[u]));
        InvariantCandidate cand;
        cand.value = RationalFunction(
            num, Polynomial::monomial({static_cast<int>(s), static_cast<int>(t)},
                                      Rational(1)));
        const LaurentFraction reduced = laurent_normalize(num, s, t);
        cand.laurent = LaurentForm{reduced.d1, reduced.d2, reduced.num};
        if (!verify_invariant(cand.value, m, n))
            throw Error("InternalError", "search produced a non-invariant");
        out.push_back(std::move(cand));
    }
    return out;
}

}  // namespace rank2
