#include "rank2/exchange_matrix.hpp"

#include <deque>
#include <set>

#include "rank2/errors.hpp"

namespace rank2 {

ExchangeMatrix::ExchangeMatrix(long size, std::vector<Integer> entries)
    : size_(size), entries_(std::move(entries)) {
    if (size_ <= 0 || entries_.size() != static_cast<std::size_t>(size_ * size_))
        throw PreconditionViolated("exchange matrix must be square and nonempty");
}

ExchangeMatrix ExchangeMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const long n = static_cast<long>(rows.size());
    std::vector<Integer> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (static_cast<long>(row.size()) != n)
            throw PreconditionViolated("exchange matrix must be square");
        for (long v : row) entries.emplace_back(v);
    }
    return ExchangeMatrix(n, std::move(entries));
}

const Integer& ExchangeMatrix::at(long i, long j) const {
    if (i < 0 || j < 0 || i >= size_ || j >= size_)
        throw IndexOutOfRange("matrix index out of range");
    return entries_[i * size_ + j];
}

Integer& ExchangeMatrix::at(long i, long j) {
    if (i < 0 || j < 0 || i >= size_ || j >= size_)
        throw IndexOutOfRange("matrix index out of range");
    return entries_[i * size_ + j];
}

ExchangeMatrix ExchangeMatrix::negated() const {
    ExchangeMatrix r = *this;
    for (auto& e : r.entries_) e = -e;
    return r;
}

namespace {
Integer positive_part(const Integer& a) { return a > 0 ? a : Integer(0); }
}  // namespace

ExchangeMatrix matrix_mutate(const ExchangeMatrix& b, long k) {
    if (k < 1 || k > b.size()) throw IndexOutOfRange("mutation direction out of range");
    const long kk = k - 1;
    ExchangeMatrix out = b;
    for (long i = 0; i < b.size(); ++i) {
        for (long j = 0; j < b.size(); ++j) {
            if (i == kk || j == kk)
                out.at(i, j) = -b.at(i, j);
            else
                out.at(i, j) = b.at(i, j) + positive_part(b.at(i, kk)) * b.at(kk, j) +
                               b.at(i, kk) * positive_part(-b.at(kk, j));
        }
    }
    return out;
}

bool is_skew_symmetrizable(const ExchangeMatrix& b) {
    const long n = b.size();
    // sign pattern: b_ij and b_ji are both zero or strictly opposite in sign
    for (long i = 0; i < n; ++i) {
        if (b.at(i, i) != 0) return false;
        for (long j = i + 1; j < n; ++j) {
            const int si = sgn(b.at(i, j)), sj = sgn(b.at(j, i));
            if ((si == 0) != (sj == 0)) return false;
            if (si != 0 && si == sj) return false;
        }
    }
    // propagate d_j/d_i = -b_ij/b_ji over the nonzero graph; check cycles
    std::vector<Rational> ratio(n, Rational(0));
    std::vector<bool> seen(n, false);
    for (long root = 0; root < n; ++root) {
        if (seen[root]) continue;
        ratio[root] = 1;
        seen[root] = true;
        std::deque<long> queue{root};
        while (!queue.empty()) {
            const long i = queue.front();
            queue.pop_front();
            for (long j = 0; j < n; ++j) {
                if (b.at(i, j) == 0) continue;
                Rational r = ratio[i] * Rational(-b.at(i, j)) / Rational(b.at(j, i));
                if (!seen[j]) {
                    ratio[j] = r;
                    seen[j] = true;
                    queue.push_back(j);
                } else if (ratio[j] != r) {
                    return false;
                }
            }
        }
    }
    return true;
}

ImrReport check_imr(const ExchangeMatrix& b, long depth) {
    if (depth < 1) throw PreconditionViolated("depth must be >= 1");
    const ExchangeMatrix neg = b.negated();
    auto key = [&](const ExchangeMatrix& mtx) {
        std::vector<Integer> k;
        k.reserve(mtx.size() * mtx.size());
        for (long i = 0; i < mtx.size(); ++i)
            for (long j = 0; j < mtx.size(); ++j) k.push_back(mtx.at(i, j));
        return k;
    };

    ImrReport report;
    std::set<std::vector<Integer>> visited{key(b)};
    std::deque<std::pair<ExchangeMatrix, long>> queue{{b, 0}};
    report.matrices_seen = 1;
    while (!queue.empty()) {
        auto [cur, dist] = queue.front();
        queue.pop_front();
        if (dist == depth) continue;
        for (long k = 1; k <= b.size(); ++k) {
            ExchangeMatrix next = matrix_mutate(cur, k);
            if (!(next == b) && !(next == neg)) {
                report.imr = false;
                report.exhausted = false;
                return report;
            }
            if (visited.insert(key(next)).second) {
                ++report.matrices_seen;
                queue.emplace_back(std::move(next), dist + 1);
            }
        }
    }
    report.imr = true;
    report.exhausted = true;
    return report;
}

}  // namespace rank2
