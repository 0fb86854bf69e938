#pragma once

#include "morin/grading.hpp"
#include "morin/page_engine.hpp"

namespace morin {

// Number of free algebra generators per degree; the degree-0 entry is ignored.
struct GeneratorSpectrum {
    Series ranks;
};

// Poincare series of the free graded-commutative algebra on the spectrum.
Series free_gca_series(const GeneratorSpectrum& g, int max_degree);

// Generators read off the E2 ranks, each degree moved by `shift`
// (degrees that land at or below 0 are dropped).
GeneratorSpectrum spectrum_from_page(const PageReport& page, int shift = 0);

Series loopspace_series(int d, const ColumnBound& r, int max_degree, int shift = 0);

// Ranks of the surviving column-0 subalgebra, P(d).
Series mmm_subseries(int d, int max_degree);

}  // namespace morin
