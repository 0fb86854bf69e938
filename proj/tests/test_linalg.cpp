#include <doctest.h>

#include "morin/linalg.hpp"

#include <random>

using namespace morin;

namespace {

// Dense rational elimination, kept deliberately naive.
std::size_t dense_rank(std::vector<std::vector<mpq_class>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

SparseMatrix to_sparse(const std::vector<std::vector<mpq_class>>& m) {
    SparseMatrix s(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != 0) s.add(i, j, m[i][j]);
    return s;
}

}  // namespace

TEST_CASE("small matrices") {
    SparseMatrix fold(2, 3);
    fold.add(0, 0, 1);
    fold.add(0, 1, 1);
    fold.add(1, 1, 1);
    fold.add(1, 2, 1);
    CHECK(fold.rank() == 2);
    SparseVector kernel{{0, 1}, {1, -1}, {2, 1}};
    CHECK(fold.apply(kernel).empty());
    CHECK(fold.nonzeros() == 4);

    SparseMatrix zero(3, 4);
    CHECK(zero.is_zero());
    CHECK(zero.rank() == 0);
}

TEST_CASE("echelon span membership") {
    RowEchelon e;
    CHECK(e.insert({{0, 2}, {3, mpq_class(1, 3)}}));
    CHECK(e.insert({{1, 1}, {3, 1}}));
    CHECK_FALSE(e.insert({{0, 6}, {1, -2}, {3, -1}}));
    CHECK(e.in_span({{0, 4}, {3, mpq_class(2, 3)}}));
    CHECK_FALSE(e.in_span({{2, 1}}));
    CHECK(e.rank() == 2);
}

TEST_CASE("rank against dense elimination on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9, inner = 1 + rng() % 5;
        // product of two random factors, so low rank is common
        std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(inner)),
            b(inner, std::vector<mpq_class>(cols)), m(rows, std::vector<mpq_class>(cols));
        for (auto& row : a)
            for (auto& x : row) x = static_cast<int>(rng() % 7) - 3;
        for (auto& row : b)
            for (auto& x : row) {
                x = mpq_class(static_cast<int>(rng() % 9) - 4, 1 + rng() % 3);
                x.canonicalize();
            }
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                for (std::size_t k = 0; k < inner; ++k) m[i][j] += a[i][k] * b[k][j];
        SparseMatrix s = to_sparse(m);
        const std::size_t want = dense_rank(m);
        CHECK(s.rank() == want);
        CHECK(want <= inner);

        // multiply agrees with the dense product
        SparseMatrix prod = to_sparse(a).multiply(to_sparse(b));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) CHECK(prod.entry(i, j) == m[i][j]);
    }
}

TEST_CASE("large coefficients stay exact") {
    // Hilbert-like matrix, full rank despite nearly dependent rows
    const std::size_t n = 12;
    std::vector<SparseVector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        SparseVector v;
        for (std::size_t j = 0; j < n; ++j) v[j] = mpq_class(1, static_cast<unsigned long>(i + j + 1));
        rows.push_back(v);
    }
    CHECK(rank_of(rows) == n);
    rows.push_back(rows[3]);
    CHECK(rank_of(rows) == n);
}
