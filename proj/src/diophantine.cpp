#include "rank2/diophantine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <thread>

#include "rank2/errors.hpp"
#include "rank2/expr.hpp"
#include "rank2/invariants.hpp"

namespace rank2 {

DioEquation make_dio_equation(std::string name, RationalFunction T, long m, long n,
                              IntPair initial) {
    if (initial.first < 1 || initial.second < 1)
        throw PreconditionViolated("initial solution must be positive");
    if (!verify_invariant(T, m, n))
        throw NotInvariant("equation left side is not a mutation invariant");
    DioEquation eq;
    eq.name = std::move(name);
    eq.level = ratfunc_eval(T, Rational(initial.first), Rational(initial.second));
    eq.T = std::move(T);
    eq.m = m;
    eq.n = n;
    eq.initial = std::move(initial);
    return eq;
}

const std::vector<DioEquation>& dio_presets() {
    static const std::vector<DioEquation> presets = [] {
        struct Spec {
            const char* name;
            const char* expr;
            long m, n;
        };
        const Spec specs[] = {
            {"a1a1", "(x1^2*x2 + x1*x2^2 + 2*x1 + 2*x2)/(x1*x2)", 0, 0},
            {"a2", "(x1^2*x2 + x1^2 + x1*x2^2 + 2*x1 + x2^2 + 2*x2 + 1)/(x1*x2)", 1, 1},
            {"b2", "(x1^2*x2^2 + x1^2 + 2*x1 + x2^4 + 2*x2^2 + 1)/(x1*x2^2)", 1, 2},
            {"g2",
             "(x1^2*x2 + x1^2 + x1*x2^3 + 2*x1*x2 + 2*x1 + x2^4 + x2^3 + x2 + 1)/"
             "(x1*x2^2)",
             1, 3},
            {"22", "(x1^2 + x2^2 + 1)/(x1*x2)", 2, 2},
            {"14", "(x1^2 + 2*x1 + x2^4 + 1)/(x1*x2^2)", 1, 4},
        };
        std::vector<DioEquation> out;
        for (const Spec& s : specs)
            out.push_back(make_dio_equation(s.name, parse_ratfunc(s.expr), s.m, s.n,
                                            {Integer(1), Integer(1)}));
        return out;
    }();
    return presets;
}

const DioEquation& dio_preset(const std::string& name) {
    for (const DioEquation& eq : dio_presets())
        if (eq.name == name) return eq;
    throw PreconditionViolated("unknown preset '" + name + "'");
}

IntPair dio_step(const IntPair& p, int direction, long m, long n) {
    if (direction != 1 && direction != 2)
        throw IndexOutOfRange("mutation direction must be 1 or 2");
    if (p.first < 1 || p.second < 1)
        throw PreconditionViolated("pair components must be >= 1");
    const long e = direction == 1 ? n : m;
    const Integer& base = direction == 1 ? p.second : p.first;
    const Integer& divisor = direction == 1 ? p.first : p.second;
    Integer num;
    mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    num += 1;
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), divisor.get_mpz_t());
    if (r != 0)
        throw NonIntegral("(" + num.get_str() + ")/" + divisor.get_str() +
                          " is not an integer");
    return direction == 1 ? IntPair{q, p.second} : IntPair{p.first, q};
}

namespace {

void assert_on_level(const DioEquation& eq, const IntPair& p) {
    const Rational v = ratfunc_eval(eq.T, Rational(p.first), Rational(p.second));
    if (v != eq.level)
        throw Error("LevelSetViolation",
                    "orbit left the level set at (" + p.first.get_str() + "," +
                        p.second.get_str() + ")");
}

}  // namespace

Orbit enumerate_orbit(const DioEquation& eq, const Integer& bound) {
    if (bound < eq.initial.first || bound < eq.initial.second)
        throw PreconditionViolated("bound must cover the initial solution");
    Orbit orbit;
    orbit.closed = true;
    std::map<IntPair, bool> visited;
    std::deque<OrbitNode> queue;
    assert_on_level(eq, eq.initial);
    visited[eq.initial] = true;
    queue.push_back({eq.initial, ""});
    while (!queue.empty()) {
        OrbitNode cur = std::move(queue.front());
        queue.pop_front();
        for (int dir = 1; dir <= 2; ++dir) {
            IntPair next = dio_step(cur.pair, dir, eq.m, eq.n);
            if (visited.count(next)) continue;
            if (next.first > bound || next.second > bound) {
                orbit.closed = false;
                continue;
            }
            assert_on_level(eq, next);
            visited[next] = true;
            queue.push_back({next, cur.word + static_cast<char>('0' + dir)});
        }
        orbit.nodes.push_back(std::move(cur));
    }
    return orbit;
}

std::vector<IntPair> orbit_walk_order(const DioEquation& eq, const Integer& bound) {
    std::vector<IntPair> out;
    std::map<IntPair, bool> seen;
    auto emit = [&](const IntPair& p) {
        if (!seen.count(p)) {
            seen[p] = true;
            out.push_back(p);
        }
    };
    emit(eq.initial);
    for (const int first_dir : {1, 2}) {
        IntPair cur = eq.initial;
        int dir = first_dir;
        std::map<std::pair<IntPair, int>, bool> states;
        while (true) {
            if (states.count({cur, dir})) break;  // ray became periodic
            states[{cur, dir}] = true;
            IntPair next = dio_step(cur, dir, eq.m, eq.n);
            if (next.first > bound || next.second > bound) break;
            emit(next);
            cur = std::move(next);
            dir = 3 - dir;
        }
    }
    return out;
}

namespace {

// bound on |p| over [1,B]^2 used to decide whether int64 evaluation is safe
Integer poly_abs_bound(const Polynomial& p, const Integer& b) {
    Integer acc(0);
    for (const auto& [mono, c] : p.terms()) {
        Integer term;
        mpz_pow_ui(term.get_mpz_t(), b.get_mpz_t(),
                   static_cast<unsigned long>(mono.e1 + mono.e2));
        Integer cnum = c.get_num();
        mpz_abs(cnum.get_mpz_t(), cnum.get_mpz_t());
        acc += cnum * term;
    }
    return acc;
}

struct FastTerm {
    int e1, e2;
    long long c;
};

std::vector<IntPair> scan_rows_fast(const DioEquation& eq, long lo, long hi,
                                    long bound) {
    // solution test: num(a,b) * level_den == level_num * den(a,b)
    std::vector<FastTerm> num_terms, den_terms;
    for (const auto& [mono, c] : eq.T.num().terms())
        num_terms.push_back({mono.e1, mono.e2, static_cast<long long>(c.get_num().get_si())});
    for (const auto& [mono, c] : eq.T.den().terms())
        den_terms.push_back({mono.e1, mono.e2, static_cast<long long>(c.get_num().get_si())});
    const long long lev_num = static_cast<long long>(eq.level.get_num().get_si());
    const long long lev_den = static_cast<long long>(eq.level.get_den().get_si());
    const int max1 = std::max(eq.T.num().max_deg1(), eq.T.den().max_deg1());
    const int max2 = std::max(eq.T.num().max_deg2(), eq.T.den().max_deg2());

    std::vector<IntPair> out;
    std::vector<long long> ap(max1 + 1), bp(max2 + 1);
    for (long a = lo; a <= hi; ++a) {
        ap[0] = 1;
        for (int e = 1; e <= max1; ++e) ap[e] = ap[e - 1] * a;
        for (long b = 1; b <= bound; ++b) {
            bp[0] = 1;
            for (int e = 1; e <= max2; ++e) bp[e] = bp[e - 1] * b;
            long long num = 0, den = 0;
            for (const FastTerm& t : num_terms) num += t.c * ap[t.e1] * bp[t.e2];
            for (const FastTerm& t : den_terms) den += t.c * ap[t.e1] * bp[t.e2];
            if (num * lev_den == lev_num * den)
                out.emplace_back(Integer(a), Integer(b));
        }
    }
    return out;
}

std::vector<IntPair> scan_rows_exact(const DioEquation& eq, const Integer& lo,
                                     const Integer& hi, const Integer& bound) {
    std::vector<IntPair> out;
    const Polynomial& num = eq.T.num();
    const Polynomial& den = eq.T.den();
    for (Integer a = lo; a <= hi; ++a) {
        for (Integer b = 1; b <= bound; ++b) {
            const Rational va(a), vb(b);
            if (num.eval(va, vb) * eq.level.get_den() ==
                Rational(eq.level.get_num()) * den.eval(va, vb))
                out.emplace_back(a, b);
        }
    }
    return out;
}

}  // namespace

std::vector<IntPair> brute_force_solutions(const DioEquation& eq,
                                           const Integer& bound, int threads) {
    std::vector<IntPair> out;
    if (bound < 1) return out;

    // int64 is safe when every intermediate stays far below 2^63
    const Integer safety =
        (poly_abs_bound(eq.T.num(), bound) * eq.level.get_den() +
         poly_abs_bound(eq.T.den(), bound) * abs(Integer(eq.level.get_num())));
    const bool fast = safety.fits_slong_p() &&
                      safety.get_si() < (std::numeric_limits<long long>::max() / 4) &&
                      bound.fits_slong_p();

    const long rows = fast ? bound.get_si() : 0;
    threads = std::max(1, threads);
    if (fast && threads > 1 && rows >= threads) {
        std::vector<std::vector<IntPair>> chunks(threads);
        std::vector<std::thread> pool;
        const long per = rows / threads;
        for (int t = 0; t < threads; ++t) {
            const long lo = t * per + 1;
            const long hi = (t == threads - 1) ? rows : (t + 1) * per;
            pool.emplace_back([&, t, lo, hi] {
                chunks[t] = scan_rows_fast(eq, lo, hi, rows);
            });
        }
        for (auto& th : pool) th.join();
        for (auto& c : chunks)
            out.insert(out.end(), std::make_move_iterator(c.begin()),
                       std::make_move_iterator(c.end()));
        return out;
    }
    if (fast) return scan_rows_fast(eq, 1, rows, rows);
    return scan_rows_exact(eq, Integer(1), bound, bound);
}

bool certify_completeness(const DioEquation& eq, const Integer& bound, int threads) {
    const Orbit orbit = enumerate_orbit(eq, bound);
    std::vector<IntPair> orbit_pairs;
    orbit_pairs.reserve(orbit.nodes.size());
    for (const OrbitNode& node : orbit.nodes) orbit_pairs.push_back(node.pair);
    std::sort(orbit_pairs.begin(), orbit_pairs.end());
    std::vector<IntPair> brute = brute_force_solutions(eq, bound, threads);
    std::sort(brute.begin(), brute.end());
    return orbit_pairs == brute;
}

DescentReport check_descent(const IntPair& pair) {
    const DioEquation& eq = dio_preset("14");
    const Integer &a = pair.first, &b = pair.second;
    if (a < 1 || b < 1) throw PreconditionViolated("pair must be positive");
    if (a == 1 || b == 1)
        throw PreconditionViolated("descent needs a != 1 and b != 1");
    if (ratfunc_eval(eq.T, Rational(a), Rational(b)) != eq.level)
        throw PreconditionViolated("pair does not solve the (1,4) equation");

    const Integer b2 = b * b;
    if (a == b2) throw PreconditionViolated("a = b^2 only happens at (1,1)");
    const Integer ap = dio_step(pair, 1, eq.m, eq.n).first;
    const Integer bp = dio_step(pair, 2, eq.m, eq.n).second;
    const Integer bp2 = bp * bp;

    DescentReport report;
    const std::string sa = a.get_str(), sb2 = b2.get_str();
    if (a > b2) {
        report.ok = (ap < b2 && b2 < a) && (bp2 > a);
        report.detail = "a=" + sa + " > b^2=" + sb2 + ": a'=" + ap.get_str() +
                        " < b^2 < a and b'^2=" + bp2.get_str() + " > a";
    } else {
        report.ok = (ap > b2) && (bp2 < a);
        report.detail = "a=" + sa + " < b^2=" + sb2 + ": a'=" + ap.get_str() +
                        " > b^2 > a and b'^2=" + bp2.get_str() + " < a";
    }
    if (!report.ok) report.detail += " (FAILED)";
    return report;
}

}  // namespace rank2
