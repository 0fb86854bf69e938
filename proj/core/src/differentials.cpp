#include "morin/differentials.hpp"

#include <stdexcept>

namespace morin {

namespace {

[[noreturn]] void bad_image(const std::string& what, const Stratum& t, const Polynomial& p) {
    throw std::logic_error(what + " at " + t.label() + ": " + p.to_string());
}

}  // namespace

void accumulate(Combination& into, const Combination& x, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [e, c] : x) {
        auto [it, inserted] = into.emplace(e, c * scale);
        if (!inserted) {
            it->second += c * scale;
            if (it->second == 0) into.erase(it);
        }
    }
}

Combination thom_combination(const Stratum& target, bool euler, const Polynomial& p) {
    Combination out;
    if (p.is_zero()) return out;
    const ContentPiece* piece = nullptr;
    auto content = column_content(target);
    for (const auto& c : content)
        if (c.euler == euler) piece = &c;
    if (!piece) bad_image("image in an absent piece", target, p);

    const VariableSet vars = target.vars();
    for (const auto& [m, c] : p.terms())
        if (!m.lives_in(vars)) bad_image("variable outside the target ring", target, p);
    Polynomial q = p.with_vars(vars);

    if (piece->flavor == Flavor::Sym && !(swap(q) == q)) bad_image("non-symmetric image", target, p);
    if (piece->flavor == Flavor::Skew && !(swap(q) == -q)) bad_image("non-skew image", target, p);

    for (const auto& [m, c] : q.terms()) {
        if (piece->flavor != Flavor::Full) {
            Monomial t = m.swapped();
            if (t < m || (piece->flavor == Flavor::Skew && t == m)) continue;
        }
        out.emplace(BasisElement{target, *piece, m}, c);
    }
    return out;
}

Combination d0(int d, const BasisElement& x, const DifferentialOptions& opt) {
    if (x.stratum.level != 0) throw std::invalid_argument("d0: element not in column 0");
    Combination out;
    if (d % 2 == 1 || !x.piece.euler) return out;
    for (int a = 0; 2 * a <= d; ++a) {
        Stratum t = Stratum::make(d, 1, a);
        int sign = (a % 2 == 1 && !opt.flip_regular_alternation) ? -1 : 1;
        accumulate(out, thom_combination(t, false, s_hom(x.monomial, t.vars())), sign);
    }
    return out;
}

Combination d_fold(int d, const BasisElement& x, const DifferentialOptions& opt) {
    if (x.stratum.level != 1) throw std::invalid_argument("d_fold: element not in column 1");
    Combination out;
    if (x.piece.euler) return out;
    const int a = x.stratum.a;
    const int b = x.stratum.b;
    const Polynomial p = x.polynomial();

    auto push = [&](int ta, const Polynomial& q) {
        Stratum t = Stratum::make(d, 2, ta);
        accumulate(out, thom_combination(t, false, restrict(q, t.vars())));
    };

    if (a == 0) {
        push(0, p);
    } else if (a == b) {
        push(a - 1, p);
    } else if (d % 2 == 0 && 2 * a == d) {
        push(a - 1, p);
        if (!opt.drop_square_doubling) {
            Polynomial r = restrict(p, VariableSet(a, a));
            push(a, r - swap(r));
        }
    } else {
        push(a - 1, p);
        push(a, p);
    }
    return out;
}

Combination d_even_col(int d, const BasisElement& x, const DifferentialOptions& opt) {
    const Stratum& s = x.stratum;
    if (s.level < 2 || s.level % 2 != 0) throw std::invalid_argument("d_even_col: wrong column");
    const int r = s.level / 2;
    Combination out;
    // r even: the plain part moves, r odd: the Euler part moves.
    if (x.piece.euler != (r % 2 == 1)) return out;
    const Polynomial p = x.polynomial();
    if (s.a == s.b) {
        if (opt.drop_square_doubling) return out;
        accumulate(out, thom_combination(Stratum::make(d, s.level + 1, s.a), x.piece.euler, p), 2);
    } else {
        for (Sign sg : {Sign::Plus, Sign::Minus})
            accumulate(out, thom_combination(Stratum::make(d, s.level + 1, s.a, sg), x.piece.euler, p), 2);
    }
    return out;
}

Combination d_odd_col(int d, const BasisElement& x, const DifferentialOptions& opt) {
    const Stratum& s = x.stratum;
    if (s.level < 3 || s.level % 2 != 1) throw std::invalid_argument("d_odd_col: wrong column");
    const int r = (s.level - 1) / 2;
    Combination out;
    if (x.piece.euler != (r % 2 == 1)) return out;
    const Polynomial p = x.polynomial();
    Stratum t = Stratum::make(d, s.level + 1, s.a);
    if (s.a == s.b) {
        if (opt.drop_square_doubling) return out;
        Polynomial q = r % 2 == 0 ? p - swap(p) : p + swap(p);
        accumulate(out, thom_combination(t, x.piece.euler, q));
    } else {
        int sign = s.sign == Sign::Plus ? 1 : -1;
        accumulate(out, thom_combination(t, x.piece.euler, p), sign);
    }
    return out;
}

Combination differential(int d, const BasisElement& x, const DifferentialOptions& opt) {
    const int k = x.stratum.level;
    if (k == 0) return d0(d, x, opt);
    if (k == 1) return d_fold(d, x, opt);
    if (k % 2 == 0) return d_even_col(d, x, opt);
    return d_odd_col(d, x, opt);
}

SparseVector coordinates(const Combination& c, const IndexedBasis& basis) {
    SparseVector v;
    for (const auto& [e, coef] : c) {
        auto pos = basis.position(e);
        if (!pos) throw std::logic_error("coordinates: element outside basis: " + e.label());
        v[*pos] += coef;
    }
    return v;
}

LinearMap assemble_matrix(int d, int column, int degree, const DifferentialOptions& opt) {
    LinearMap map;
    map.column = column;
    map.degree = degree;
    map.source = build_basis(d, column, degree);
    map.target = build_basis(d, column + 1, degree + 1);
    map.matrix = SparseMatrix(map.target.size(), map.source.size());
    for (std::size_t j = 0; j < map.source.size(); ++j)
        map.matrix.set_column(j, coordinates(differential(d, map.source[j], opt), map.target));
    return map;
}

}  // namespace morin
