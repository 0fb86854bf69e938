#include "morin/loopspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace morin {

Series free_gca_series(const GeneratorSpectrum& g, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("free_gca_series: negative truncation");
    Series out = Series::one(max_degree);
    for (int n = 1; n <= max_degree && n <= g.ranks.max_degree(); ++n) {
        std::int64_t count = g.ranks[n];
        if (count < 0) throw std::invalid_argument("free_gca_series: negative generator count");
        const Series factor = n % 2 == 0 ? Series::geometric(max_degree, n) : Series::binomial(max_degree, n);
        for (std::int64_t i = 0; i < count; ++i) out = out * factor;
    }
    return out;
}

GeneratorSpectrum spectrum_from_page(const PageReport& page, int shift) {
    GeneratorSpectrum g{Series(page.max_degree)};
    for (int n = 1; n <= page.max_degree; ++n) {
        int m = n + shift;
        if (m >= 1 && m <= page.max_degree) g.ranks.at(m) += page.total_series[n];
    }
    return g;
}

Series loopspace_series(int d, const ColumnBound& r, int max_degree, int shift) {
    // Generators of degree up to max_degree - shift are needed.
    int reach = std::max(max_degree, max_degree - shift);
    PageReport page = e2_ranks(d, r, reach);
    GeneratorSpectrum g = spectrum_from_page(page, shift);
    return free_gca_series(GeneratorSpectrum{g.ranks.truncated(max_degree)}, max_degree);
}

Series mmm_subseries(int d, int max_degree) { return bso_series(d, max_degree); }

}  // namespace morin
