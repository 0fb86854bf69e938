#include "morin/e1_page.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace morin {

int BasisElement::degree() const {
    return stratum.thom_degree() + (piece.euler ? stratum.euler_degree() : 0) + monomial.degree();
}

Polynomial BasisElement::polynomial() const {
    Polynomial p(stratum.vars(), monomial);
    if (piece.flavor == Flavor::Full) return p;
    Monomial t = monomial.swapped();
    if (t == monomial) return p;  // swap-fixed, SYM only
    p.add_term(t, piece.flavor == Flavor::Sym ? 1 : -1);
    return p;
}

std::string BasisElement::label() const {
    std::ostringstream os;
    os << stratum.label() << '[' << (piece.euler ? "e*" : "");
    Monomial t = monomial.swapped();
    if (piece.flavor == Flavor::Full || t == monomial) {
        os << monomial.to_string();
    } else {
        os << '(' << monomial.to_string() << (piece.flavor == Flavor::Sym ? " + " : " - ")
           << t.to_string() << ')';
    }
    os << ']';
    return os.str();
}

bool BasisElement::operator<(const BasisElement& o) const {
    return std::tie(stratum, piece.euler, monomial) < std::tie(o.stratum, o.piece.euler, o.monomial);
}

IndexedBasis::IndexedBasis(std::vector<BasisElement> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!index_.emplace(elements_[i], i).second)
            throw std::logic_error("IndexedBasis: duplicate element " + elements_[i].label());
    }
}

std::optional<std::size_t> IndexedBasis::position(const BasisElement& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<BasisElement> piece_elements(const Stratum& s, const ContentPiece& piece, int n) {
    std::vector<BasisElement> out;
    int rest = n - s.thom_degree() - (piece.euler ? s.euler_degree() : 0);
    for (auto& m : enumerate_monomials(s.vars(), rest)) {
        if (piece.flavor != Flavor::Full) {
            Monomial t = m.swapped();
            if (t < m) continue;  // not the orbit representative
            if (piece.flavor == Flavor::Skew && t == m) continue;
        }
        out.push_back(BasisElement{s, piece, std::move(m)});
    }
    return out;
}

IndexedBasis build_basis(int d, int column, int degree) {
    if (d < 1 || column < 0) throw std::invalid_argument("build_basis: need d >= 1, column >= 0");
    std::vector<BasisElement> all;
    for (const auto& s : enumerate_strata(d, column))
        for (const auto& piece : column_content(s)) {
            auto part = piece_elements(s, piece, degree);
            all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    return IndexedBasis(std::move(all));
}

Series column_series(int d, int column, int max_degree) {
    Series total(max_degree);
    for (const auto& s : enumerate_strata(d, column)) total += stratum_series(s, max_degree);
    return total;
}

int max_relevant_column(int d, int max_degree) { return std::max(1, max_degree - d); }

}  // namespace morin
