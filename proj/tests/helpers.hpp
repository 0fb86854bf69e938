#pragma once

#include "morin/differentials.hpp"
#include "morin/e1_page.hpp"
#include "morin/grading.hpp"
#include "morin/strata.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace testing {

using namespace morin;

// The basis element of stratum s in its Euler (or non-Euler) piece.
inline BasisElement elem(const Stratum& s, bool euler, const Monomial& m = Monomial()) {
    for (const auto& piece : column_content(s))
        if (piece.euler == euler) return BasisElement{s, piece, m};
    throw std::invalid_argument("no such piece on " + s.label());
}

inline Monomial one() { return Monomial(); }

// Plain partition-count oracle: coefficients of prod 1/(1 - t^{4i}) over
// the listed part sizes i, by the textbook coin-change recurrence.
inline std::vector<std::int64_t> coin_change(const std::vector<int>& parts, int max_degree) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(max_degree + 1), 0);
    c[0] = 1;
    for (int part : parts)
        for (int n = 4 * part; n <= max_degree; ++n) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - 4 * part)];
    return c;
}

inline std::vector<int> parts_of(int a, int b) {
    std::vector<int> parts;
    for (int i = 1; i <= a / 2; ++i) parts.push_back(i);
    for (int i = 1; i <= b / 2; ++i) parts.push_back(i);
    return parts;
}

}  // namespace testing
