#include <doctest.h>

#include "morin/loopspace.hpp"

#include <functional>
#include <random>

using namespace morin;

namespace {

// Counts monomials of each degree in the free graded-commutative algebra by
// enumerating exponent vectors (odd generators square to zero).
Series brute_force(const std::vector<int>& degrees, int D) {
    Series out(D);
    std::function<void(std::size_t, int)> walk = [&](std::size_t i, int deg) {
        if (i == degrees.size()) {
            out.at(deg) += 1;
            return;
        }
        const int g = degrees[i];
        const int max_power = g % 2 ? 1 : D;
        for (int k = 0; k <= max_power && deg + k * g <= D; ++k) walk(i + 1, deg + k * g);
    };
    walk(0, 0);
    return out;
}

GeneratorSpectrum spectrum(const std::vector<int>& degrees, int D) {
    Series s(D);
    for (int g : degrees) s.at(g) += 1;
    return {s};
}

}  // namespace

TEST_CASE("free algebra hand expansions") {
    CHECK(free_gca_series(spectrum({2}, 16), 16).to_string() == "1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1");
    CHECK(free_gca_series(spectrum({3}, 16), 16).to_string() == "1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0");
    Series mixed = free_gca_series(spectrum({4, 13}, 16), 16);
    CHECK(mixed.to_string() == "1,0,0,0,1,0,0,0,1,0,0,0,1,1,0,0,1");
    CHECK(free_gca_series(spectrum({}, 16), 16) == Series::one(16));
}

TEST_CASE("free algebra against brute force") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> degrees;
        const int count = static_cast<int>(rng() % 5);
        for (int i = 0; i < count; ++i) degrees.push_back(1 + static_cast<int>(rng() % 9));
        CHECK(free_gca_series(spectrum(degrees, 24), 24) == brute_force(degrees, 24));
    }
}

TEST_CASE("generators from a page") {
    PageReport page = e2_ranks(4, 1, 30);
    GeneratorSpectrum g = spectrum_from_page(page, 0);
    for (int n = 1; n <= 30; ++n) CHECK(g.ranks[n] == page.total_series[n]);
    CHECK(g.ranks[0] == 0);

    GeneratorSpectrum down = spectrum_from_page(page, -1);
    for (int n = 1; n < 30; ++n) CHECK(down.ranks[n] == page.total_series[n + 1]);

    Series loop = loopspace_series(4, 1, 30, 0);
    CHECK(loop[0] == 1);
    CHECK(loop.nonnegative());
    CHECK(loop == free_gca_series(g, 30));
}

TEST_CASE("surviving column-zero subalgebra") {
    CHECK(mmm_subseries(4, 40) == bso_series(4, 40));
    for (int d = 3; d <= 6; ++d)
        for (ColumnBound r : {ColumnBound(1), ColumnBound(3), ColumnBound()})
            CHECK(e2_ranks(d, r, 40).column_e2_series(0) == mmm_subseries(d, 40));
}
