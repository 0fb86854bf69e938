#include <doctest.h>

#include "helpers.hpp"
#include "morin/page_engine.hpp"

using namespace morin;
using testing::elem;

namespace {

Combination combo(std::initializer_list<std::pair<BasisElement, int>> terms) {
    Combination c;
    for (const auto& [e, coef] : terms) accumulate(c, Combination{{e, Rational(coef)}});
    return c;
}

Polynomial poly(const VariableSet& v, std::initializer_list<std::pair<Monomial, int>> terms) {
    Polynomial p(v);
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

}  // namespace

TEST_CASE("out of the regular column") {
    const Stratum reg = Stratum::regular(4);
    CHECK(d0(4, elem(reg, false, Monomial::p(1))).empty());
    CHECK(d0(4, elem(reg, false)).empty());
    Combination want = combo({{elem(Stratum::make(4, 1, 0), false), 1},
                              {elem(Stratum::make(4, 1, 1), false), -1},
                              {elem(Stratum::make(4, 1, 2), false), 1}});
    CHECK(d0(4, elem(reg, true)) == want);

    for (int n = 0; n <= 16; n += 4) {
        IndexedBasis basis = build_basis(5, 0, n);
        for (const auto& e : basis.elements()) CHECK(d0(5, e).empty());
    }
}

TEST_CASE("out of the fold column") {
    Combination want = combo({{elem(Stratum::make(4, 2, 0), false), 1}, {elem(Stratum::make(4, 2, 1), false), 1}});
    CHECK(d_fold(4, elem(Stratum::make(4, 1, 1), false)) == want);

    // p_1 dies on (1,3); the skew half lands on (2,2) doubled
    const Stratum top = Stratum::make(4, 2, 2);
    Combination img = d_fold(4, elem(Stratum::make(4, 1, 2), false, Monomial::p(1)));
    Polynomial skew = poly(top.vars(), {{Monomial::p(1), 1}, {Monomial::pprime(1), -1}});
    CHECK(img == thom_combination(top, false, skew));

    const Stratum sq = Stratum::make(5, 1, 3);
    for (int n = 12; n <= 28; ++n) {
        IndexedBasis basis = build_basis(5, 1, n);
        for (const auto& e : basis.elements())
            if (e.stratum == sq && e.piece.euler) CHECK(d_fold(5, e).empty());
    }
}

TEST_CASE("out of even columns") {
    const Stratum a4 = Stratum::make(4, 4, 0);
    Combination want = combo({{elem(Stratum::make(4, 5, 0, Sign::Plus), false), 2},
                              {elem(Stratum::make(4, 5, 0, Sign::Minus), false), 2}});
    CHECK(d_even_col(4, elem(a4, false)) == want);
    CHECK(d_even_col(4, elem(a4, true)).empty());

    const Stratum a2 = Stratum::make(4, 2, 2);
    const Stratum a3 = Stratum::make(4, 3, 2);
    Polynomial skew = poly(a2.vars(), {{Monomial::p(1), 1}, {Monomial::pprime(1), -1}});
    Combination img = d_even_col(4, elem(a2, true, Monomial::p(1)));
    CHECK(img == thom_combination(a3, true, skew * Rational(2)));
}

TEST_CASE("out of odd columns") {
    const Stratum a4 = Stratum::make(4, 4, 0);
    CHECK(d_odd_col(4, elem(Stratum::make(4, 3, 0, Sign::Plus), true)) == combo({{elem(a4, true), 1}}));
    CHECK(d_odd_col(4, elem(Stratum::make(4, 3, 0, Sign::Minus), true)) == combo({{elem(a4, true), -1}}));

    const Stratum a5 = Stratum::make(4, 5, 2);
    const Stratum a6 = Stratum::make(4, 6, 2);
    REQUIRE(column_content(a5).size() == 1);
    Combination p1 = d_odd_col(4, elem(a5, false, Monomial::p(1)));
    Combination q1 = d_odd_col(4, elem(a5, false, Monomial::pprime(1)));
    CHECK(p1 == thom_combination(a6, false, poly(a6.vars(), {{Monomial::p(1), 1}, {Monomial::pprime(1), -1}})));
    // the symmetric sum U(p_1 + p'_1) maps to 0
    accumulate(p1, q1);
    CHECK(p1.empty());
}

TEST_CASE("assembled matrices") {
    LinearMap fold = assemble_matrix(4, 1, 5);
    REQUIRE(fold.source.size() == 3);
    REQUIRE(fold.target.size() == 2);
    CHECK(fold.target[0] == elem(Stratum::make(4, 2, 0), false));
    CHECK(fold.target[1] == elem(Stratum::make(4, 2, 1), false));
    const int want[2][3] = {{1, 1, 0}, {0, 1, 1}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(fold.matrix.entry(i, j) == want[i][j]);
    CHECK(fold.matrix.rank() == 2);
    SparseVector kernel{{0, 1}, {1, -1}, {2, 1}};
    CHECK(fold.matrix.apply(kernel).empty());

    for (int n = 0; n <= 24; ++n) CHECK(assemble_matrix(5, 0, n).matrix.is_zero());
    CHECK(assemble_matrix(4, 0, 4).matrix.rank() == 1);
}

TEST_CASE("consecutive blocks compose to zero") {
    for (int d = 1; d <= 8; ++d) {
        auto rep = d_squared_check(d, 5, 32);
        CHECK_MESSAGE(rep.passed(), "d=" << d);
        CHECK(rep.checked > 0);
    }
}

TEST_CASE("images land on canonical representatives") {
    for (int d = 2; d <= 6; ++d)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 28; ++n) {
                LinearMap m = assemble_matrix(d, k, n);
                for (const auto& e : m.source.elements())
                    for (const auto& [t, c] : differential(d, e)) {
                        CHECK(m.target.position(t).has_value());
                        CHECK(c != 0);
                    }
            }
}

TEST_CASE("mutants break the complex") {
    DifferentialOptions flip{true, false}, drop{false, true};
    bool flip_caught = false, drop_caught = false;
    for (int d : {4, 6}) {
        flip_caught = flip_caught || !d_squared_check(d, 5, 20, flip).passed();
        drop_caught = drop_caught || !collapse_check(d, 20, 2, 5, drop).passed() ||
                      !d_squared_check(d, 5, 20, drop).passed();
    }
    CHECK(flip_caught);
    CHECK(drop_caught);
}
