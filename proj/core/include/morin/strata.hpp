#pragma once

#include "morin/grading.hpp"

#include <compare>
#include <string>
#include <vector>

namespace morin {

enum class Sign { None, Plus, Minus };

// One singularity stratum of maps of dimension d. Level 0 is the regular
// stratum; its ambient ring is P(d). Level 1 strata satisfy a+b = d+1,
// higher levels a+b = d, always a <= b.
struct Stratum {
    int dim = 1;
    int level = 0;
    int a = 0;
    int b = 0;
    Sign sign = Sign::None;

    static Stratum regular(int d);
    static Stratum make(int d, int level, int a, Sign sign = Sign::None);

    int thom_degree() const;   // codimension
    int euler_degree() const;  // a+b, or d at level 0
    VariableSet vars() const;
    std::string label() const;

    auto operator<=>(const Stratum&) const = default;
};

enum class ThomFlavor { None, U, UPlus, UMinus };

struct ContentPiece {
    bool euler = false;
    Flavor flavor = Flavor::Full;
    ThomFlavor thom = ThomFlavor::U;

    std::string label() const;
    bool operator==(const ContentPiece&) const = default;
};

std::vector<Stratum> enumerate_strata(int d, int level);
bool euler_available(const Stratum& s);
std::vector<ContentPiece> column_content(const Stratum& s);

// Rank series of one stratum's contribution to its column.
Series stratum_series(const Stratum& s, int max_degree);

}  // namespace morin
