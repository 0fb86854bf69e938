#include "morin/linalg.hpp"

#include <stdexcept>

namespace morin {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

Rational SparseMatrix::entry(std::size_t i, std::size_t j) const {
    const auto& c = cols_.at(j);
    auto it = c.find(i);
    return it == c.end() ? Rational(0) : it->second;
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Rational& v) {
    if (i >= rows_ || j >= cols_.size()) throw std::out_of_range("SparseMatrix::add");
    if (v == 0) return;
    auto& c = cols_[j];
    auto [it, inserted] = c.emplace(i, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) c.erase(it);
    }
}

void SparseMatrix::set_column(std::size_t j, SparseVector v) {
    for (auto it = v.begin(); it != v.end();) {
        if (it->first >= rows_) throw std::out_of_range("SparseMatrix::set_column");
        it = it->second == 0 ? v.erase(it) : std::next(it);
    }
    cols_.at(j) = std::move(v);
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
    SparseVector out;
    for (const auto& [j, xj] : x) {
        for (const auto& [i, a] : cols_.at(j)) {
            auto [it, inserted] = out.emplace(i, a * xj);
            if (!inserted) {
                it->second += a * xj;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
    if (rhs.rows() != cols()) throw std::invalid_argument("SparseMatrix::multiply: shape mismatch");
    SparseMatrix out(rows_, rhs.cols());
    for (std::size_t j = 0; j < rhs.cols(); ++j) out.set_column(j, apply(rhs.column(j)));
    return out;
}

bool SparseMatrix::is_zero() const {
    for (const auto& c : cols_)
        if (!c.empty()) return false;
    return true;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

std::size_t SparseMatrix::rank() const { return rank_of(cols_); }

RowEchelon::IntRow RowEchelon::to_integer_row(const SparseVector& v) {
    mpz_class den = 1;
    for (const auto& [i, x] : v) {
        if (x == 0) continue;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    }
    IntRow r;
    for (const auto& [i, x] : v) {
        if (x == 0) continue;
        mpz_class num = x.get_num() * (den / x.get_den());
        r.emplace(i, std::move(num));
    }
    return r;
}

namespace {

void make_primitive(std::map<std::size_t, mpz_class>& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (const auto& [i, x] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (r.begin()->second < 0) g = -g;
    if (g != 1)
        for (auto& [i, x] : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

RowEchelon::IntRow RowEchelon::reduce(IntRow r) const {
    // Every stored row leads with its pivot column, so clearing the leading
    // entry strictly increases the leading column.
    while (!r.empty()) {
        const std::size_t c = r.begin()->first;
        auto piv = pivots_.find(c);
        if (piv == pivots_.end()) break;
        const IntRow& p = piv->second;
        // r <- p[c] * r - r[c] * p
        mpz_class pc = p.begin()->second;
        mpz_class rc = r.begin()->second;
        if (pc != 1)
            for (auto& [i, x] : r) x *= pc;
        for (const auto& [i, x] : p) {
            auto [it, inserted] = r.emplace(i, -rc * x);
            if (!inserted) {
                it->second -= rc * x;
                if (it->second == 0) r.erase(it);
            }
        }
        make_primitive(r);
    }
    return r;
}

bool RowEchelon::insert(const SparseVector& v) {
    IntRow r = reduce(to_integer_row(v));
    if (r.empty()) return false;
    make_primitive(r);
    std::size_t c = r.begin()->first;
    pivots_.emplace(c, std::move(r));
    return true;
}

bool RowEchelon::in_span(const SparseVector& v) const { return reduce(to_integer_row(v)).empty(); }

std::size_t rank_of(const std::vector<SparseVector>& vectors) {
    RowEchelon ech;
    for (const auto& v : vectors) ech.insert(v);
    return ech.rank();
}

}  // namespace morin
