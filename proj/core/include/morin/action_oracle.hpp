#pragma once

#include "morin/grading.hpp"
#include "morin/report.hpp"
#include "morin/strata.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace morin {

// Generators of the ambient cohomology of a stratum's Thom space:
// the two sheet Thom classes, the tail Thom class of the extra trivial
// directions, and the Euler classes of the two sheets.
enum class Symbol { ThomA = 0, ThomB, ThomTail, EulerA, EulerB };
inline constexpr int kSymbolCount = 5;

struct SignedSymbol {
    Symbol symbol;
    int sign = 1;
    bool operator==(const SignedSymbol&) const = default;
};

// A signed substitution. Pontryagin variables are either fixed or exchanged
// (p_i <-> p'_i), never negated.
struct ActionGen {
    std::string name;
    std::array<SignedSymbol, kSymbolCount> image;
    bool swap_pontryagin = false;

    static ActionGen identity(std::string name = "id");
    ActionGen& set(Symbol from, Symbol to, int sign);
    const SignedSymbol& operator()(Symbol s) const { return image[static_cast<int>(s)]; }

    // (g * h)(x) = g(h(x))
    ActionGen compose(const ActionGen& h) const;
    bool same_action(const ActionGen& o) const {
        return image == o.image && swap_pontryagin == o.swap_pontryagin;
    }
};

enum class ThomSheet { Single, Prime, DoublePrime };

struct AmbientBasisElement {
    ThomSheet sheet = ThomSheet::Single;
    int euler_a = 0;
    int euler_b = 0;
    Monomial monomial;

    int degree(const Stratum& s) const;
    bool operator==(const AmbientBasisElement&) const = default;
    bool operator<(const AmbientBasisElement& o) const;
};

std::vector<ActionGen> symmetry_action(const Stratum& s);

// All group elements generated by the stratum's generators.
std::vector<ActionGen> generated_group(const Stratum& s);

std::vector<AmbientBasisElement> ambient_basis(const Stratum& s, int degree);

// Image of a basis element together with the sign picked up.
std::pair<AmbientBasisElement, int> apply(const ActionGen& g, const Stratum& s,
                                          const AmbientBasisElement& x);

Series invariant_series(const Stratum& s, int max_degree);

CheckReport oracle_crosscheck(int d, int level, int max_degree);

}  // namespace morin
