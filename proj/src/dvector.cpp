#include "rank2/dvector.hpp"

#include <algorithm>
#include <array>

#include "rank2/errors.hpp"

namespace rank2 {

namespace {

struct SeedDv {
    DVector v1, v2;
};

}  // namespace

std::vector<DvRow> dvectors_recurrence(long m, long n, long k_max) {
    if (k_max < 1) throw PreconditionViolated("k_max must be >= 1");
    const SeedDv origin{{Integer(-1), Integer(0)}, {Integer(0), Integer(-1)}};

    // d' = -d + max(e * d_other, 0) componentwise. In the growth regime the
    // max always selects e * d_other except on the two edges at t0, which is
    // the usual four-branch form; the max form also survives the finite-type
    // wrap-around, where d-vectors return to negative unit vectors.
    auto advance = [m, n](const SeedDv& s, long from, long to) {
        const long lower = std::min(from, to);
        const bool label1 = ((lower % 2) + 2) % 2 == 0;
        const Integer zero(0);
        SeedDv out = s;
        if (label1) {
            const Integer c1 = Integer(n) * s.v2.e1;
            const Integer c2 = Integer(n) * s.v2.e2;
            out.v1.e1 = -s.v1.e1 + std::max(c1, zero);
            out.v1.e2 = -s.v1.e2 + std::max(c2, zero);
        } else {
            const Integer c1 = Integer(m) * s.v1.e1;
            const Integer c2 = Integer(m) * s.v1.e2;
            out.v2.e1 = -s.v2.e1 + std::max(c1, zero);
            out.v2.e2 = -s.v2.e2 + std::max(c2, zero);
        }
        return out;
    };

    std::vector<DvRow> rows(2 * k_max + 1);
    rows[k_max] = {0, origin.v1, origin.v2};
    SeedDv cur = origin;
    for (long p = 0; p < k_max; ++p) {
        cur = advance(cur, p, p + 1);
        rows[k_max + p + 1] = {p + 1, cur.v1, cur.v2};
    }
    cur = origin;
    for (long p = 0; p > -k_max; --p) {
        cur = advance(cur, p, p - 1);
        rows[k_max + p - 1] = {p - 1, cur.v1, cur.v2};
    }
    return rows;
}

namespace {

using Mat2 = std::array<Integer, 4>;  // row-major 2x2

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat2_pow(Mat2 base, long e) {
    Mat2 r{Integer(1), Integer(0), Integer(0), Integer(1)};
    while (e > 0) {
        if (e & 1) r = mat2_mul(r, base);
        e >>= 1;
        if (e > 0) base = mat2_mul(base, base);
    }
    return r;
}

DVector combine(const Integer& c1, const DVector& u, const Integer& c2,
                const DVector& v) {
    return {c1 * u.e1 + c2 * v.e1, c1 * u.e2 + c2 * v.e2};
}

struct Anchors {
    DVector d1_t1{Integer(1), Integer(0)};
    DVector d2_t1{Integer(0), Integer(-1)};
    DVector d1_t2{Integer(1), Integer(0)};
    DVector d2_t2;
    explicit Anchors(long m) : d2_t2{Integer(m), Integer(1)} {}
};

}  // namespace

Integer closed_form_alpha(long m, long n, int i, long j) {
    if (i < 1 || i > 4) throw IndexOutOfRange("coefficient index in 1..4");
    const Mat2 w1{Integer(-1), Integer(n), Integer(-m), Integer(m * n - 1)};
    return mat2_pow(w1, j)[i - 1];
}

Integer closed_form_beta(long m, long n, int i, long j) {
    if (i < 1 || i > 4) throw IndexOutOfRange("coefficient index in 1..4");
    const Mat2 w2{Integer(m * n - 1), Integer(-n), Integer(m), Integer(-1)};
    return mat2_pow(w2, j)[i - 1];
}

ClosedQuad dvectors_closed_form(long m, long n, long k) {
    const long mn = m * n;
    if (mn <= 3) throw UnsupportedRegime("closed forms need mn >= 4");
    if (k < 1) throw PreconditionViolated("k must be >= 1");
    const Anchors a(m);
    ClosedQuad q;

    auto even_pair = [&](const Integer& c11, const Integer& c12, const Integer& c21,
                         const Integer& c22) {
        q.d1_even = combine(c11, a.d1_t1, -c12, a.d2_t1);
        q.d2_even = combine(c21, a.d1_t1, -c22, a.d2_t1);
    };
    auto odd_pair = [&](const Integer& c11, const Integer& c12, const Integer& c21,
                        const Integer& c22) {
        q.d1_odd = combine(-c11, a.d1_t2, c12, a.d2_t2);
        q.d2_odd = combine(-c21, a.d1_t2, c22, a.d2_t2);
    };

    if (m == 2 && n == 2) {
        even_pair(Integer(2 * k - 1), Integer(2 * k - 2), Integer(2 * k),
                  Integer(2 * k - 1));
        odd_pair(Integer(2 * k - 1), Integer(2 * k), Integer(2 * k - 2),
                 Integer(2 * k - 1));
    } else if (m == 1 && n == 4) {
        even_pair(Integer(2 * k - 1), Integer(4 * k - 4), Integer(k),
                  Integer(2 * k - 1));
        odd_pair(Integer(2 * k - 1), Integer(4 * k), Integer(k - 1),
                 Integer(2 * k - 1));
    } else if (m == 4 && n == 1) {
        // x1 <-> x2 relabeling of the (1,4) case
        even_pair(Integer(2 * k - 1), Integer(k - 1), Integer(4 * k),
                  Integer(2 * k - 1));
        odd_pair(Integer(2 * k - 1), Integer(k), Integer(4 * k - 4),
                 Integer(2 * k - 1));
    } else {
        const Mat2 w1{Integer(-1), Integer(n), Integer(-m), Integer(mn - 1)};
        const Mat2 w2{Integer(mn - 1), Integer(-n), Integer(m), Integer(-1)};
        const Mat2 alpha = mat2_pow(w1, k - 1);
        const Mat2 beta = mat2_pow(w2, k - 1);
        even_pair(alpha[0] + m * alpha[1], alpha[1], alpha[2] + m * alpha[3],
                  alpha[3]);
        odd_pair(beta[0], n * beta[0] + beta[1], beta[2], n * beta[2] + beta[3]);
    }
    return q;
}

ClosedQuad dvectors_matrix_form(long m, long n, long k) {
    const long mn = m * n;
    if (mn <= 3) throw UnsupportedRegime("matrix form used for mn >= 4");
    if (k < 1) throw PreconditionViolated("k must be >= 1");
    using Mat4 = std::array<Integer, 16>;
    auto mul = [](const Mat4& x, const Mat4& y) {
        Mat4 r{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Integer acc(0);
                for (int t = 0; t < 4; ++t) acc += x[i * 4 + t] * y[t * 4 + j];
                r[i * 4 + j] = acc;
            }
        return r;
    };
    const Mat4 u{Integer(1), Integer(0),  Integer(0),  Integer(0),
                 Integer(m), Integer(-1), Integer(0),  Integer(0),
                 Integer(0), Integer(0),  Integer(-1), Integer(n),
                 Integer(0), Integer(0),  Integer(0),  Integer(1)};
    const Mat4 w{Integer(-1), Integer(n),      Integer(0),      Integer(0),
                 Integer(-m), Integer(mn - 1), Integer(0),      Integer(0),
                 Integer(0),  Integer(0),      Integer(mn - 1), Integer(-n),
                 Integer(0),  Integer(0),      Integer(m),      Integer(-1)};
    Mat4 acc = u;
    for (long i = 1; i < k; ++i) acc = mul(w, acc);

    const Anchors a(m);
    const std::array<DVector, 4> a1{a.d1_t1, a.d2_t1, a.d1_t2, a.d2_t2};
    std::array<DVector, 4> b;
    for (int i = 0; i < 4; ++i) {
        DVector v{Integer(0), Integer(0)};
        for (int j = 0; j < 4; ++j) {
            v.e1 += acc[i * 4 + j] * a1[j].e1;
            v.e2 += acc[i * 4 + j] * a1[j].e2;
        }
        b[i] = v;
    }
    return {b[0], b[1], b[2], b[3]};
}

namespace {

#if defined(__SIZEOF_FLOAT128__)
using Quad = __float128;
#else
using Quad = long double;
#endif

Quad quad_sqrt(Quad x) {
    if (x <= 0) return 0;
    Quad guess = static_cast<Quad>(__builtin_sqrtl(static_cast<long double>(x)));
    for (int i = 0; i < 8; ++i) guess = (guess + x / guess) / 2;
    return guess;
}

Integer quad_round(Quad v) {
    const bool neg = v < 0;
    Quad mag = neg ? -v : v;
    const long r = static_cast<long>(mag + static_cast<Quad>(0.5));
    return Integer(neg ? -r : r);
}

Integer coef_float(long m, long n, int i, long j, bool beta) {
    if (i < 1 || i > 4) throw IndexOutOfRange("coefficient index in 1..4");
    const Quad mn = static_cast<Quad>(m) * static_cast<Quad>(n);
    if (mn <= 4) throw UnsupportedRegime("float coefficients need mn >= 5");
    const Quad a = mn / 2 - 1;
    const Quad b = quad_sqrt(mn * (mn - 4)) / 2;
    Quad lo = 1, hi = 1;  // (a-b)^j, (a+b)^j
    for (long t = 0; t < j; ++t) {
        lo *= (a - b);
        hi *= (a + b);
    }
    const Quad s_mn = quad_sqrt(mn);
    const Quad s_gap = quad_sqrt(mn - 4);
    const Quad s_m = quad_sqrt(static_cast<Quad>(m));
    const Quad s_n = quad_sqrt(static_cast<Quad>(n));
    const int sign = beta ? -1 : +1;  // beta swaps the roles of the two roots
    Quad v = 0;
    switch (i) {
        case 1: v = (lo + hi + sign * s_mn * (lo - hi) / s_gap) / 2; break;
        case 2: v = sign * s_n * (hi - lo) / (s_m * s_gap); break;
        case 3: v = sign * s_m * (lo - hi) / (s_n * s_gap); break;
        case 4:
            v = ((-sign * s_mn + s_gap) * lo + (sign * s_mn + s_gap) * hi) /
                (2 * s_gap);
            break;
    }
    return quad_round(v);
}

}  // namespace

Integer closed_form_alpha_float(long m, long n, int i, long j) {
    return coef_float(m, n, i, j, false);
}

Integer closed_form_beta_float(long m, long n, int i, long j) {
    return coef_float(m, n, i, j, true);
}

ClosedFormParams make_closed_form_params(long m, long n) {
    if (m * n <= 4) throw UnsupportedRegime("closed-form parameters need mn >= 5");
    const long double mn = static_cast<long double>(m) * n;
    return {m, n, mn / 2 - 1, __builtin_sqrtl(mn * (mn - 4)) / 2};
}

AlgebraType classify(long m, long n) {
    if (m < 0 || n < 0) throw PreconditionViolated("m, n must be >= 0");
    const long mn = m * n;
    if (mn <= 3) return AlgebraType::finite;
    if (mn == 4) return AlgebraType::affine;
    return AlgebraType::non_affine;
}

const char* to_string(AlgebraType t) {
    switch (t) {
        case AlgebraType::finite: return "finite";
        case AlgebraType::affine: return "affine";
        case AlgebraType::non_affine: return "non_affine";
    }
    return "?";
}

bool check_growth(long m, long n, long k_max) {
    if (m * n <= 3) throw UnsupportedRegime("growth holds only for mn >= 4");
    if (k_max < 5) throw PreconditionViolated("k_max must be >= 5");
    const auto rows = dvectors_recurrence(m, n, k_max);
    auto at = [&](long pos) -> const DvRow& { return rows[k_max + pos]; };
    auto le = [](const DVector& x, const DVector& y) {
        return x.e1 <= y.e1 && x.e2 <= y.e2;
    };
    auto lt = [](const DVector& x, const DVector& y) {
        return x.e1 < y.e1 && x.e2 < y.e2;
    };
    for (long j = 3; j < k_max; ++j) {
        if (!le(at(j).v1, at(j + 1).v1) || !le(at(j).v2, at(j + 1).v2)) return false;
        if (j + 2 <= k_max) {
            if (!lt(at(j).v1, at(j + 2).v1) || !lt(at(j).v2, at(j + 2).v2))
                return false;
        }
    }
    return true;
}

bool check_dvector_vs_cluster(long m, long n, long k_max, const WalkLimits& limits) {
    if (k_max < 1) throw PreconditionViolated("k_max must be >= 1");
    const auto rows = dvectors_recurrence(m, n, k_max);
    auto matches = [&](const Seed& s, const DvRow& row) {
        return row.v1.e1 == s.var1.d1 && row.v1.e2 == s.var1.d2 &&
               row.v2.e1 == s.var2.d1 && row.v2.e2 == s.var2.d2;
    };
    Seed cur = initial_seed(m, n);
    if (!matches(cur, rows[k_max])) return false;
    for (long p = 0; p < k_max; ++p) {
        cur = mutate_seed(cur, (((p % 2) + 2) % 2 == 0) ? 1 : 2, limits);
        if (!matches(cur, rows[k_max + p + 1])) return false;
    }
    cur = initial_seed(m, n);
    for (long p = 0; p > -k_max; --p) {
        cur = mutate_seed(cur, (((p % 2) + 2) % 2 == 0) ? 2 : 1, limits);
        if (!matches(cur, rows[k_max + p - 1])) return false;
    }
    return true;
}

}  // namespace rank2
