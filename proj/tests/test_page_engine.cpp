#include <doctest.h>

#include "helpers.hpp"
#include "morin/page_engine.hpp"

using namespace morin;

TEST_CASE("second page spot values") {
    PageReport inf = e2_ranks(4, std::nullopt, 40);
    CHECK(inf.total_series[0] == 1);
    CHECK(inf.total_series[4] == 1);
    CHECK(inf.total_series[5] == 0);
    CHECK(inf.total_series[13] >= 1);

    CHECK(e2_ranks(4, 1, 40).total_series[5] == 2);
    CHECK(e2_ranks(5, 1, 40).total_series[6] == 3);
}

TEST_CASE("closed forms for d = 4, built independently") {
    const int D = 40;
    Series r1 = full_series(0, 5, D) + (full_series(1, 4, D) + full_series(2, 3, D)).shifted(5);
    CHECK(e2_ranks(4, 1, D).total_series == r1);

    Series rinf = bso_series(4, D) + full_series(1, 4, D).shifted(13);
    CHECK(e2_ranks(4, std::nullopt, D).total_series == rinf);

    Series r2 = rinf + (skew_series(2, D) + full_series(0, 4, D)).shifted(10);
    CHECK(e2_ranks(4, 2, D).total_series == r2);

    for (ColumnBound r : {ColumnBound(1), ColumnBound(2), ColumnBound(3), ColumnBound(6), ColumnBound()}) {
        PageReport page = e2_ranks(4, r, D);
        REQUIRE(page.comparison.has_value());
        CHECK_FALSE(page.comparison->first_mismatch.has_value());
    }
}

TEST_CASE("closed forms for the remaining dimensions") {
    // d = 1, 3, 5, 7 agree for every bound
    for (int d : {1, 3, 5, 7})
        for (ColumnBound r : {ColumnBound(1), ColumnBound(2), ColumnBound(4), ColumnBound()}) {
            PageReport page = e2_ranks(d, r, 40);
            REQUIRE(page.comparison.has_value());
            CHECK_MESSAGE(!page.comparison->first_mismatch, "d=" << d << " R=" << bound_name(r));
        }
    // The encoded unbounded closed forms for d = 2, 6, 8 disagree with the
    // computed page starting at these degrees (frozen from full runs).
    const std::pair<int, int> frozen[] = {{2, 7}, {6, 19}, {8, 17}};
    for (auto [d, first] : frozen) {
        PageReport page = e2_ranks(d, std::nullopt, 40);
        REQUIRE(page.comparison.has_value());
        CHECK(page.comparison->first_mismatch == first);
    }
}

TEST_CASE("page bookkeeping") {
    for (int d = 1; d <= 7; ++d)
        for (ColumnBound r : {ColumnBound(0), ColumnBound(1), ColumnBound(3), ColumnBound()}) {
            PageReport page = e2_ranks(d, r, 30);
            Series total(30);
            for (const auto& st : page.entries) {
                CHECK(st.e2_rank >= 0);
                CHECK(st.kernel_rank == st.e1_rank - st.d_rank);
                CHECK(st.e2_rank == st.kernel_rank - st.image_rank_from_left);
                if (r) CHECK(st.column <= *r);
                if (r && st.column == *r) CHECK(st.d_rank == 0);
                if (st.column > 0) {
                    const ColumnDegreeStats* left = page.find(st.column - 1, st.degree - 1);
                    CHECK(st.image_rank_from_left == (left ? left->d_rank : 0));
                }
                total.at(st.degree) += st.e2_rank;
            }
            CHECK(total == page.total_series);
            if (r != ColumnBound(0)) CHECK(page.column_e2_series(0) == bso_series(d, 30));
            else CHECK(page.column_e2_series(0) == column_series(d, 0, 30));
        }
}

TEST_CASE("collapse") {
    for (int d = 1; d <= 8; ++d) CHECK_MESSAGE(collapse_check(d, 32).passed(), "d=" << d);
}

TEST_CASE("kernel generator classes") {
    auto classes = kernel_generator_classes(4, 40);
    bool found = false;
    for (const auto& g : classes) {
        if (g.kind != GeneratorKind::AlternatingSum || g.degree != 13) continue;
        if (g.data.coefficient(Monomial::pprime(2)) != 1) continue;
        found = true;
        Combination want{{testing::elem(Stratum::make(4, 1, 0), false, Monomial::pprime(2)), 1},
                         {testing::elem(Stratum::make(4, 1, 1), false, Monomial::pprime(2)), -1}};
        CHECK(g.expansion == want);
    }
    CHECK(found);

    int euler12 = 0;
    for (const auto& g : kernel_generator_classes(5, 40))
        if (g.kind == GeneratorKind::Euler && g.degree == 12) {
            ++euler12;
            CHECK((g.index == 0 || g.index == 2));
        }
    CHECK(euler12 == 2);

    int top = 0;
    for (const auto& g : kernel_generator_classes(7, 40))
        if (g.kind == GeneratorKind::EulerTop) {
            ++top;
            CHECK(g.flavor == Flavor::Sym);
            CHECK(swap(g.data) == g.data);
        }
    CHECK(top > 0);

    for (int d = 3; d <= 7; ++d) CHECK_MESSAGE(verify_generators(d, 40).passed(), "d=" << d);
}

TEST_CASE("the unit top-sum class is the image of the Euler class") {
    const BasisElement e = testing::elem(Stratum::regular(4), true);
    for (const auto& g : kernel_generator_classes(4, 8))
        if (g.kind == GeneratorKind::TopSum && g.degree == 5) CHECK(g.expansion == d0(4, e));
    for (const auto& [x, c] : d0(4, e)) CHECK(d_fold(4, x).size() <= 2);
    LinearMap fold = assemble_matrix(4, 1, 5);
    CHECK(fold.matrix.apply(coordinates(d0(4, e), fold.source)).empty());
}
