#include "morin/page_engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace morin {

std::string bound_name(const ColumnBound& r) { return r ? std::to_string(*r) : std::string("inf"); }

Series PageReport::column_e2_series(int column) const {
    Series s(max_degree);
    for (const auto& e : entries)
        if (e.column == column) s.at(e.degree) = e.e2_rank;
    return s;
}

const ColumnDegreeStats* PageReport::find(int column, int degree) const {
    for (const auto& e : entries)
        if (e.column == column && e.degree == degree) return &e;
    return nullptr;
}

long RankTable::dimension(int column, int degree) {
    auto key = std::make_pair(column, degree);
    auto it = dims_.find(key);
    if (it != dims_.end()) return it->second;
    long n = column < 0 ? 0 : static_cast<long>(build_basis(d_, column, degree).size());
    dims_.emplace(key, n);
    return n;
}

long RankTable::rank(int column, int degree) {
    if (column < 0) return 0;
    auto key = std::make_pair(column, degree);
    auto it = ranks_.find(key);
    if (it != ranks_.end()) return it->second;
    long r = 0;
    if (dimension(column, degree) > 0 && dimension(column + 1, degree + 1) > 0)
        r = static_cast<long>(assemble_matrix(d_, column, degree, opt_).matrix.rank());
    ranks_.emplace(key, r);
    return r;
}

int last_column(int d, const ColumnBound& r, int max_degree) {
    int k = max_relevant_column(d, max_degree);
    return r ? std::min(*r, k) : k;
}

PageReport e2_ranks(int d, const ColumnBound& r, int max_degree, const DifferentialOptions& opt) {
    if (d < 1) throw std::invalid_argument("e2_ranks: need d >= 1");
    if (r && *r < 0) throw std::invalid_argument("e2_ranks: negative column bound");
    PageReport rep;
    rep.dim = d;
    rep.r = r;
    rep.max_degree = max_degree;
    rep.total_series = Series(max_degree);
    RankTable table(d, opt);
    const int kmax = last_column(d, r, max_degree);
    for (int k = 0; k <= kmax; ++k) {
        const bool truncated = r && k == *r;
        for (int n = 0; n <= max_degree; ++n) {
            ColumnDegreeStats st;
            st.column = k;
            st.degree = n;
            st.e1_rank = table.dimension(k, n);
            st.d_rank = truncated ? 0 : table.rank(k, n);
            st.kernel_rank = st.e1_rank - st.d_rank;
            st.image_rank_from_left = table.rank(k - 1, n - 1);
            st.e2_rank = st.kernel_rank - st.image_rank_from_left;
            if (st.e2_rank < 0) throw std::logic_error("e2_ranks: negative homology rank");
            rep.total_series.at(n) += st.e2_rank;
            if (st.e1_rank > 0) rep.entries.push_back(st);
        }
    }
    if (closed_form(d, r, max_degree)) rep.comparison = compare_with_closed_form(rep);
    return rep;
}

CheckReport collapse_check(int d, int max_degree, int min_column, int max_column,
                           const DifferentialOptions& opt) {
    CheckReport rep;
    rep.name = "collapse d=" + std::to_string(d);
    RankTable table(d, opt);
    for (int k = min_column; k <= max_column; ++k) {
        for (int n = 0; n <= max_degree; ++n) {
            long kernel = table.dimension(k, n) - table.rank(k, n);
            long image = table.rank(k - 1, n - 1);
            ++rep.checked;
            if (kernel != image) {
                std::ostringstream os;
                os << "kernel rank " << kernel << " != image rank " << image;
                rep.fail(k, n, os.str());
            }
        }
    }
    return rep;
}

CheckReport d_squared_check(int d, int max_column, int max_degree, const DifferentialOptions& opt) {
    CheckReport rep;
    rep.name = "d^2 d=" + std::to_string(d);
    for (int k = 0; k <= max_column; ++k) {
        for (int n = 0; n <= max_degree; ++n) {
            LinearMap first = assemble_matrix(d, k, n, opt);
            if (first.source.empty() || first.target.empty()) continue;
            LinearMap second = assemble_matrix(d, k + 1, n + 1, opt);
            if (second.target.empty()) continue;
            ++rep.checked;
            SparseMatrix comp = second.matrix.multiply(first.matrix);
            if (!comp.is_zero()) {
                std::ostringstream os;
                os << comp.nonzeros() << " nonzero entries in the composite";
                rep.fail(k, n, os.str());
            }
        }
    }
    return rep;
}

SeriesComparison compare_with_closed_form(const PageReport& report) {
    auto cf = closed_form(report.dim, report.r, report.max_degree);
    if (!cf) throw std::invalid_argument("compare_with_closed_form: no closed form encoded");
    SeriesComparison cmp;
    cmp.expected = cf->series;
    cmp.notes = cf->notes;
    for (int n = 0; n <= report.max_degree; ++n) {
        if (report.total_series[n] != cf->series[n]) {
            cmp.first_mismatch = n;
            break;
        }
    }
    return cmp;
}

}  // namespace morin
