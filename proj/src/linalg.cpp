#include "rank2/linalg.hpp"

#include <algorithm>

#include "rank2/errors.hpp"

namespace rank2 {

namespace {

struct Echelon {
    IntMatrix rows;              // nonzero echelon rows
    std::vector<long> pivot_col; // per row
};

// Bareiss fraction-free forward elimination; divisions are exact
Echelon eliminate(IntMatrix m) {
    Echelon e;
    if (m.empty()) return e;
    const long cols = static_cast<long>(m[0].size());
    const long rows = static_cast<long>(m.size());
    Integer prev(1);
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long pivot = -1;
        for (long i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        const Integer piv = m[r][c];
        for (long i = r + 1; i < rows; ++i) {
            for (long j = c + 1; j < cols; ++j) {
                Integer t = m[i][j] * piv - m[i][c] * m[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
            m[i][c] = 0;
        }
        prev = piv;
        e.rows.push_back(std::move(m[r]));
        e.pivot_col.push_back(c);
        ++r;
    }
    return e;
}

std::vector<Integer> primitive(const std::vector<Rational>& v) {
    Integer lcm_den(1), gcd_num(0);
    for (const auto& q : v) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
    }
    std::vector<Integer> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = Integer(v[i].get_num() * (lcm_den / v[i].get_den()));
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), out[i].get_mpz_t());
    }
    if (gcd_num > 1)
        for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), gcd_num.get_mpz_t());
    for (const auto& z : out) {
        if (z != 0) {
            if (z < 0)
                for (auto& w : out) w = -w;
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<Integer>> nullspace(IntMatrix m) {
    std::vector<std::vector<Integer>> basis;
    if (m.empty()) return basis;
    const long cols = static_cast<long>(m[0].size());
    Echelon e = eliminate(std::move(m));

    std::vector<bool> is_pivot(cols, false);
    for (long c : e.pivot_col) is_pivot[c] = true;

    for (long free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[free_col] = 1;
        for (long r = static_cast<long>(e.rows.size()) - 1; r >= 0; --r) {
            const long p = e.pivot_col[r];
            Rational acc(0);
            for (long c = p + 1; c < cols; ++c)
                if (x[c] != 0) acc += Rational(e.rows[r][c]) * x[c];
            x[p] = -acc / Rational(e.rows[r][p]);
        }
        basis.push_back(primitive(x));
    }
    return basis;
}

bool in_row_space(IntMatrix rows, const std::vector<Integer>& v) {
    if (rows.empty()) return std::all_of(v.begin(), v.end(),
                                         [](const Integer& z) { return z == 0; });
    const long cols = static_cast<long>(rows[0].size());
    if (static_cast<long>(v.size()) != cols)
        throw PreconditionViolated("dimension mismatch");
    Echelon e = eliminate(std::move(rows));
    std::vector<Rational> r(cols);
    for (long c = 0; c < cols; ++c) r[c] = Rational(v[c]);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const long p = e.pivot_col[i];
        if (r[p] == 0) continue;
        const Rational factor = r[p] / Rational(e.rows[i][p]);
        for (long c = p; c < cols; ++c)
            if (e.rows[i][c] != 0) r[c] -= factor * Rational(e.rows[i][c]);
    }
    return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace rank2
