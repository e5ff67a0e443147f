#include "rank2/engine.hpp"

#include <map>

#include "rank2/errors.hpp"

namespace rank2 {

bool same_labeled_seed(const Seed& a, const Seed& b) {
    return a.exchange == b.exchange && a.var1 == b.var1 && a.var2 == b.var2;
}

Seed initial_seed(long m, long n) {
    Seed s;
    s.var1 = lf_var(1);
    s.var2 = lf_var(2);
    s.exchange = {m, n, +1};
    s.position = 0;
    return s;
}

namespace {

void enforce_limit(const LaurentFraction& lf, const WalkLimits& limits) {
    if (limits.max_terms != 0 && lf.num.term_count() > limits.max_terms)
        throw ResourceExhausted("cluster variable numerator exceeds " +
                                std::to_string(limits.max_terms) + " terms (" +
                                std::to_string(lf.num.term_count()) + ")");
}

// the denominator vector of the next variable is known before any polynomial
// work happens, and deep-walk numerators fill about half of the degree box;
// refuse steps that cannot fit the budget instead of computing them
void preflight_limit(long d1, long d2, const WalkLimits& limits) {
    if (limits.max_terms == 0) return;
    const double projected =
        (static_cast<double>(d1 < 0 ? -d1 : d1) + 1.0) *
        (static_cast<double>(d2 < 0 ? -d2 : d2) + 1.0) / 2.0;
    if (projected > static_cast<double>(limits.max_terms))
        throw ResourceExhausted(
            "projected numerator support (~" +
            std::to_string(static_cast<long>(projected)) + " terms) exceeds " +
            std::to_string(limits.max_terms));
}

int direction_exponent(const ExchangeData& e, int direction) {
    // the mutation binomial is symmetric, so only |entries| matter; that is
    // the rank-2 invariant-mutation-rule property
    return static_cast<int>(direction == 1 ? e.n : e.m);
}

}  // namespace

Seed mutate_seed(const Seed& s, int direction, const WalkLimits& limits) {
    if (direction != 1 && direction != 2)
        throw IndexOutOfRange("mutation direction must be 1 or 2");
    Seed out = s;
    const long e = direction_exponent(s.exchange, direction);
    const LaurentFraction& other = direction == 1 ? s.var2 : s.var1;
    const LaurentFraction& cur = direction == 1 ? s.var1 : s.var2;
    preflight_limit(e * other.d1 - cur.d1, e * other.d2 - cur.d2, limits);
    LaurentFraction next = lf_div(lf_add_one(lf_pow(other, e)), cur);
    enforce_limit(next, limits);
    (direction == 1 ? out.var1 : out.var2) = std::move(next);
    out.exchange.sign = -s.exchange.sign;
    // direction-1 edges join even positions to the odd position on the right
    const bool even = (s.position % 2) == 0;
    if (direction == 1)
        out.position = even ? s.position + 1 : s.position - 1;
    else
        out.position = even ? s.position - 1 : s.position + 1;
    return out;
}

std::vector<Seed> walk(long m, long n, std::string_view word,
                       const WalkLimits& limits) {
    std::vector<Seed> seeds;
    seeds.reserve(word.size() + 1);
    seeds.push_back(initial_seed(m, n));
    for (const char c : word) {
        if (c != '1' && c != '2')
            throw PreconditionViolated("walk words are strings over {1,2}");
        seeds.push_back(mutate_seed(seeds.back(), c - '0', limits));
    }
    return seeds;
}

ClusterEnumeration enumerate_clusters(long m, long n, long max_steps,
                                      const WalkLimits& limits) {
    if (max_steps < 1) throw PreconditionViolated("max_steps must be >= 1");
    ClusterEnumeration out;
    Seed cur = initial_seed(m, n);
    const Seed start = cur;
    out.labeled_clusters.push_back(cur);
    for (long j = 1; j <= max_steps; ++j) {
        cur = mutate_seed(cur, (j % 2) ? 1 : 2, limits);
        if (same_labeled_seed(cur, start)) {
            out.period = j;
            return out;
        }
        out.labeled_clusters.push_back(cur);
    }
    out.labeled_clusters.resize(max_steps);  // t0..t(max_steps-1)
    return out;
}

RfPair m_action(const RfPair& pair, int direction, long m, long n) {
    if (direction != 1 && direction != 2)
        throw IndexOutOfRange("mutation direction must be 1 or 2");
    const RationalFunction x1 = RationalFunction::var(1);
    const RationalFunction x2 = RationalFunction::var(2);
    RationalFunction s1 = x1, s2 = x2;
    if (direction == 1)
        s1 = (x2.pow(n) + RationalFunction::constant(1)) / x1;
    else
        s2 = (x1.pow(m) + RationalFunction::constant(1)) / x2;
    return {ratfunc_substitute(pair.first, s1, s2),
            ratfunc_substitute(pair.second, s1, s2)};
}

namespace {

// substitute x_dir -> (x_other^e + 1)/x_dir into one Laurent fraction and
// cancel the binomial powers exactly
LaurentFraction substitute_laurent(const LaurentFraction& f, int direction,
                                   long m, long n, const WalkLimits& limits) {
    const long e = direction == 1 ? n : m;
    Polynomial binom = direction == 1 ? Polynomial::variable(2, static_cast<int>(e))
                                      : Polynomial::variable(1, static_cast<int>(e));
    if (e == 0)
        binom = Polynomial::constant(2);
    else
        binom += Polynomial::constant(1);

    // group by the exponent of the substituted variable
    std::map<int, Polynomial> groups;
    for (const auto& [mono, c] : f.num.terms()) {
        const int key = direction == 1 ? mono.e1 : mono.e2;
        const Monomial rest = direction == 1 ? Monomial{0, mono.e2}
                                             : Monomial{mono.e1, 0};
        groups[key].add_term(rest, c);
    }
    const int top = groups.rbegin()->first;
    const long dsub = direction == 1 ? f.d1 : f.d2;
    preflight_limit(direction == 1 ? top - dsub : f.d1,
                    direction == 1 ? f.d2 : top - dsub, limits);

    // N(subst) * x_dir^top = sum_a C_a * binom^a * x_dir^(top-a)
    Polynomial p;
    Polynomial binom_pow = Polynomial::constant(1);
    int cur = 0;
    for (const auto& [a, coeff] : groups) {
        for (; cur < a; ++cur) binom_pow *= binom;
        const Monomial shift = direction == 1 ? Monomial{top - a, 0}
                                              : Monomial{0, top - a};
        p += coeff * binom_pow.shifted(shift.e1, shift.e2);
        if (limits.max_terms != 0 && p.term_count() > 32 * limits.max_terms)
            throw ResourceExhausted("substitution intermediate exceeds " +
                                    std::to_string(32 * limits.max_terms) +
                                    " terms");
    }

    if (dsub >= 0) {
        for (long i = 0; i < dsub; ++i) p = exact_div(p, binom);
    } else {
        for (long i = 0; i < -dsub; ++i) p *= binom;
    }
    const long new_dsub = static_cast<long>(top) - dsub;
    LaurentFraction out =
        direction == 1 ? laurent_normalize(std::move(p), new_dsub, f.d2)
                       : laurent_normalize(std::move(p), f.d1, new_dsub);
    if (limits.max_terms != 0 && out.num.term_count() > limits.max_terms)
        throw ResourceExhausted("substitution image exceeds " +
                                std::to_string(limits.max_terms) + " terms");
    return out;
}

std::string pair_str(const std::pair<LaurentFraction, LaurentFraction>& p) {
    return "(" + str(p.first) + ", " + str(p.second) + ")";
}

}  // namespace

std::pair<LaurentFraction, LaurentFraction> m_action_laurent(
    const std::pair<LaurentFraction, LaurentFraction>& pair, int direction,
    long m, long n, const WalkLimits& limits) {
    return {substitute_laurent(pair.first, direction, m, n, limits),
            substitute_laurent(pair.second, direction, m, n, limits)};
}

EquivalenceReport check_mutation_maction_equivalence(long m, long n, long k_max,
                                                     const WalkLimits& limits) {
    if (k_max < 0) throw PreconditionViolated("k_max must be >= 0");
    EquivalenceReport report;

    // Four alternating sequences of length 2*k_max+1: seed walks starting
    // with mu_1 / mu_2, and M-action applications starting with M~_1 / M~_2.
    // Prefixes line up as
    //   seed(1) odd 2k+1  ~ mact(1) odd  : mu_1(mu_2 mu_1)^k = M~_1(M~_2 M~_1)^k
    //   seed(2) odd 2k+1  ~ mact(2) odd  : the (2,1) form of the same identity
    //   seed(2) even 2k   ~ mact(1) even : (mu_1 mu_2)^k = (M~_2 M~_1)^k
    //   seed(1) even 2k   ~ mact(2) even : (mu_2 mu_1)^k = (M~_1 M~_2)^k
    // (the even cases reverse the operation order between the two sides)
    const long steps = 2 * k_max + 1;

    Seed seed1 = initial_seed(m, n);
    Seed seed2 = initial_seed(m, n);
    std::pair<LaurentFraction, LaurentFraction> mact1{lf_var(1), lf_var(2)};
    std::pair<LaurentFraction, LaurentFraction> mact2 = mact1;

    auto equal_pairs = [](const Seed& s,
                          const std::pair<LaurentFraction, LaurentFraction>& p) {
        return ratfunc_equal(to_ratfunc(s.var1), to_ratfunc(p.first)) &&
               ratfunc_equal(to_ratfunc(s.var2), to_ratfunc(p.second));
    };

    for (long step = 1; step <= steps; ++step) {
        const int dir_first = (step % 2) ? 1 : 2;   // alternating, starts 1
        const int dir_second = (step % 2) ? 2 : 1;  // alternating, starts 2
        seed1 = mutate_seed(seed1, dir_first, limits);
        seed2 = mutate_seed(seed2, dir_second, limits);
        mact1 = m_action_laurent(mact1, dir_first, m, n, limits);
        mact2 = m_action_laurent(mact2, dir_second, m, n, limits);

        const bool odd = (step % 2) == 1;
        const long k = odd ? (step - 1) / 2 : step / 2;
        struct Check {
            const Seed* seed;
            const std::pair<LaurentFraction, LaurentFraction>* mact;
            const char* label;
        };
        std::vector<Check> checks;
        if (odd) {
            checks.push_back({&seed1, &mact1, "mu_i(mu_j mu_i)^k, (i,j)=(1,2)"});
            checks.push_back({&seed2, &mact2, "mu_i(mu_j mu_i)^k, (i,j)=(2,1)"});
        } else {
            checks.push_back({&seed2, &mact1, "(mu_i mu_j)^k, (i,j)=(1,2)"});
            checks.push_back({&seed1, &mact2, "(mu_i mu_j)^k, (i,j)=(2,1)"});
        }
        for (const Check& c : checks) {
            if (!equal_pairs(*c.seed, *c.mact)) {
                report.ok = false;
                report.counterexample =
                    std::string(c.label) + " fails at k=" + std::to_string(k) +
                    ": mutation side (" + str(c.seed->var1) + ", " +
                    str(c.seed->var2) + ") vs M-action side " +
                    pair_str(*c.mact);
                return report;
            }
        }
    }
    return report;
}

}  // namespace rank2
