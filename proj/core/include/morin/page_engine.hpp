#pragma once

#include "morin/differentials.hpp"
#include "morin/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace morin {

// Column bound of the truncated spectrum; nullopt means no bound.
using ColumnBound = std::optional<int>;

std::string bound_name(const ColumnBound& r);

struct ColumnDegreeStats {
    int column = 0;
    int degree = 0;
    long e1_rank = 0;
    long d_rank = 0;  // rank of the outgoing differential (0 in the last column)
    long kernel_rank = 0;
    long image_rank_from_left = 0;
    long e2_rank = 0;
};

struct SeriesComparison {
    Series expected;
    std::optional<int> first_mismatch;
    std::vector<std::string> notes;
};

struct PageReport {
    int dim = 1;
    ColumnBound r;
    int max_degree = 0;
    std::vector<ColumnDegreeStats> entries;
    Series total_series;
    std::optional<SeriesComparison> comparison;

    Series column_e2_series(int column) const;
    const ColumnDegreeStats* find(int column, int degree) const;
};

// Memoized ranks of the degree blocks of d1 for one dimension.
class RankTable {
public:
    explicit RankTable(int d, DifferentialOptions opt = {}) : d_(d), opt_(opt) {}

    int dim() const { return d_; }
    long dimension(int column, int degree);  // size of the E1 slice
    long rank(int column, int degree);       // rank of column -> column+1 at degree

private:
    int d_;
    DifferentialOptions opt_;
    std::map<std::pair<int, int>, long> dims_;
    std::map<std::pair<int, int>, long> ranks_;
};

// Highest column that meets degrees <= max_degree under the given bound.
int last_column(int d, const ColumnBound& r, int max_degree);

PageReport e2_ranks(int d, const ColumnBound& r, int max_degree, const DifferentialOptions& opt = {});

// ker d1 = im d1 in columns min_column..max_column, degrees <= max_degree.
CheckReport collapse_check(int d, int max_degree, int min_column = 2, int max_column = 5,
                           const DifferentialOptions& opt = {});

// Consecutive blocks compose to zero for columns 0..max_column.
CheckReport d_squared_check(int d, int max_column, int max_degree, const DifferentialOptions& opt = {});

struct ClosedForm {
    Series series;
    std::vector<std::string> notes;  // index-range readings applied
};

std::optional<ClosedForm> closed_form(int d, const ColumnBound& r, int max_degree);

// Computed total series against the encoded closed form, if any.
SeriesComparison compare_with_closed_form(const PageReport& report);

// ---------------------------------------------------------------- generators

enum class GeneratorKind { AlternatingSum, TopSum, Euler, EulerTop };

struct GeneratorClass {
    GeneratorKind kind = GeneratorKind::AlternatingSum;
    int index = 0;         // primed-variable index for alternating sums, a for Euler classes
    std::string label;     // human-readable name
    Polynomial data;       // p, Q or e-factor polynomial as stated
    Flavor flavor = Flavor::Full;
    int degree = 0;
    Combination expansion;  // in the column-1 basis
};

std::string kind_name(GeneratorKind k);

std::vector<GeneratorClass> kernel_generator_classes(int d, int max_degree);

CheckReport verify_generators(int d, int max_degree);

}  // namespace morin
