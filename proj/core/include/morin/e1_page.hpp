#pragma once

#include "morin/grading.hpp"
#include "morin/strata.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace morin {

// One E1 generator. For SYM pieces the monomial is the smaller member of
// its swap orbit and stands for m + swap(m) (or m when fixed); for SKEW
// pieces it stands for m - swap(m) and is never swap-fixed.
struct BasisElement {
    Stratum stratum;
    ContentPiece piece;
    Monomial monomial;

    int degree() const;
    int column() const { return stratum.level; }
    Polynomial polynomial() const;  // the represented element of P(a,b)
    std::string label() const;

    bool operator==(const BasisElement& o) const {
        return stratum == o.stratum && piece.euler == o.piece.euler && monomial == o.monomial;
    }
    bool operator<(const BasisElement& o) const;
};

class IndexedBasis {
public:
    IndexedBasis() = default;
    explicit IndexedBasis(std::vector<BasisElement> elements);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const std::vector<BasisElement>& elements() const { return elements_; }
    const BasisElement& operator[](std::size_t i) const { return elements_[i]; }
    std::optional<std::size_t> position(const BasisElement& e) const;

private:
    std::vector<BasisElement> elements_;
    std::map<BasisElement, std::size_t> index_;
};

// Elements for one content piece at total degree n.
std::vector<BasisElement> piece_elements(const Stratum& s, const ContentPiece& piece, int n);

IndexedBasis build_basis(int d, int column, int degree);
Series column_series(int d, int column, int max_degree);

// Columns that can meet degrees <= max_degree.
int max_relevant_column(int d, int max_degree);

}  // namespace morin
