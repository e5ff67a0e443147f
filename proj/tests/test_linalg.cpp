#include "doctest.h"
#include "rank2/linalg.hpp"

using namespace rank2;

namespace {

IntMatrix mat(const std::vector<std::vector<long>>& rows) {
    IntMatrix m;
    for (const auto& r : rows) {
        std::vector<Integer> row;
        for (long v : r) row.emplace_back(v);
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<Integer> vec(const std::vector<long>& v) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

bool is_in_kernel(const IntMatrix& m, const std::vector<Integer>& x) {
    for (const auto& row : m) {
        Integer acc(0);
        for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * x[i];
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("nullspace of a full-rank matrix is empty") {
    CHECK(nullspace(mat({{1, 0}, {0, 1}})).empty());
    CHECK(nullspace(mat({{2, 1}, {1, 1}, {0, 5}})).empty());
}

TEST_CASE("one-dimensional kernel comes out primitive") {
    // x2 = -x3 and x1 = -x3: spanned by (1, 1, -1) after sign normalization
    const IntMatrix m = mat({{1, 2, 3}, {0, 1, 1}});
    const auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK(is_in_kernel(m, basis[0]));
    CHECK(basis[0] == vec({1, 1, -1}));
}

TEST_CASE("kernel dimension matches rank deficiency") {
    const IntMatrix m = mat({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 1, 1}});
    const auto basis = nullspace(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) CHECK(is_in_kernel(m, v));
    // deterministic order: one vector per free column, ascending, first
    // nonzero entry positive
    CHECK(basis[0] == vec({2, -1, 0, 0}));
    CHECK(basis[1] == vec({1, 0, 1, -1}));
}

TEST_CASE("fraction-free elimination survives awkward pivots") {
    const IntMatrix m = mat({{0, 0, 2, -2}, {3, 6, 0, 3}, {0, 0, 7, -7}});
    const auto basis = nullspace(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) CHECK(is_in_kernel(m, v));
}

TEST_CASE("row space membership") {
    const IntMatrix rows = mat({{1, 2, 3}, {0, 1, 1}});
    CHECK(in_row_space(rows, vec({1, 3, 4})));
    CHECK(in_row_space(rows, vec({2, 4, 6})));
    CHECK_FALSE(in_row_space(rows, vec({0, 0, 1})));
    CHECK(in_row_space({}, vec({})));
}
