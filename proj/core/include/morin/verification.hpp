#pragma once

#include "morin/differentials.hpp"
#include "morin/page_engine.hpp"
#include "morin/report.hpp"

#include <vector>

namespace morin::verification {

// Invariant series of every stratum of level 1..max_level against the content tables.
CheckReport oracle_agreement(int d, int max_level = 7, int max_degree = 40);

CheckReport d_squared(int d, int max_column = 5, int max_degree = 40, const DifferentialOptions& opt = {});

CheckReport collapse(int d, int max_degree = 36, const DifferentialOptions& opt = {});

// Computed total series against the closed form. Spot values are added for d = 4.
CheckReport closed_form_match(int d, const ColumnBound& r, int max_degree = 40,
                              const DifferentialOptions& opt = {});

CheckReport generator_suite(int d, int max_degree = 40);

// P(4s) and the skew part of P(2s,2s) add up to P(2s,2s); the symmetrization
// map is injective with image the symmetric part.
CheckReport symmetrization(int s, int max_degree = 48);

// For even d the first truncation splits into one wedge summand per fold stratum.
CheckReport fold_wedge(int d, int max_degree = 40);

// E2 column 0 equals the ring P(d) for the given bound.
CheckReport mmm_survival(int d, const ColumnBound& r, int max_degree = 40);

CheckReport free_gca_sanity(int max_degree = 16);

// Each corruption of the differential must trip the d^2, collapse or
// closed-form checks for d below max_degree.
CheckReport mutation_sensitivity(int d = 4, int max_degree = 20);

std::vector<ColumnBound> standard_bounds();  // 1..6 and unbounded

}  // namespace morin::verification
