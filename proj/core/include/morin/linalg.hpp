#pragma once

#include "morin/grading.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

namespace morin {

using SparseVector = std::map<std::size_t, Rational>;

// Column-major sparse matrix: column j is the image of source vector j.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }
    const SparseVector& column(std::size_t j) const { return cols_.at(j); }
    Rational entry(std::size_t i, std::size_t j) const;

    void add(std::size_t i, std::size_t j, const Rational& v);
    void set_column(std::size_t j, SparseVector v);

    SparseVector apply(const SparseVector& x) const;
    // this * rhs, where rhs.rows() == this->cols()
    SparseMatrix multiply(const SparseMatrix& rhs) const;
    bool is_zero() const;
    std::size_t nonzeros() const;

    std::size_t rank() const;

private:
    std::size_t rows_ = 0;
    std::vector<SparseVector> cols_;
};

// Incremental echelon form over the integers. Vectors are scaled to
// primitive integer rows and reduced fraction-free against earlier pivots,
// always eliminating the lowest index first.
class RowEchelon {
public:
    // Returns true when v is independent of everything inserted so far.
    bool insert(const SparseVector& v);
    bool in_span(const SparseVector& v) const;
    std::size_t rank() const { return pivots_.size(); }

private:
    using IntRow = std::map<std::size_t, mpz_class>;
    static IntRow to_integer_row(const SparseVector& v);
    IntRow reduce(IntRow r) const;
    std::map<std::size_t, IntRow> pivots_;
};

std::size_t rank_of(const std::vector<SparseVector>& vectors);

}  // namespace morin
