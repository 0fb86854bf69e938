#pragma once

#include "morin/e1_page.hpp"
#include "morin/linalg.hpp"

#include <map>

namespace morin {

using Combination = std::map<BasisElement, Rational>;

// Deliberate corruptions of the differential, used only to show that the
// verification checks are not vacuous.
struct DifferentialOptions {
    bool flip_regular_alternation = false;  // drop the (-1)^a signs out of column 0
    bool drop_square_doubling = false;      // send the a = b doubling terms to 0
};

struct LinearMap {
    int column = 0;
    int degree = 0;
    IndexedBasis source;
    IndexedBasis target;
    SparseMatrix matrix;  // |target| x |source|
};

// Expresses U_target * (e^euler) * p in the target's basis. The polynomial
// must lie in the piece's flavored subspace.
Combination thom_combination(const Stratum& target, bool euler, const Polynomial& p);

void accumulate(Combination& into, const Combination& x, const Rational& scale = 1);

Combination d0(int d, const BasisElement& x, const DifferentialOptions& opt = {});
Combination d_fold(int d, const BasisElement& x, const DifferentialOptions& opt = {});
Combination d_even_col(int d, const BasisElement& x, const DifferentialOptions& opt = {});
Combination d_odd_col(int d, const BasisElement& x, const DifferentialOptions& opt = {});

// Dispatches on the element's column.
Combination differential(int d, const BasisElement& x, const DifferentialOptions& opt = {});

// Degree-n block of d1 from column k to column k+1 (degree n+1).
LinearMap assemble_matrix(int d, int column, int degree, const DifferentialOptions& opt = {});

// Coordinates of a combination in an indexed basis.
SparseVector coordinates(const Combination& c, const IndexedBasis& basis);

}  // namespace morin
