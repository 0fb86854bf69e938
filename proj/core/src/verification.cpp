#include "morin/verification.hpp"

#include "morin/action_oracle.hpp"
#include "morin/linalg.hpp"
#include "morin/loopspace.hpp"

#include <sstream>
#include <stdexcept>

namespace morin::verification {

namespace {

void compare_series(CheckReport& rep, int column, const Series& got, const Series& want, const std::string& what) {
    ++rep.checked;
    for (int n = 0; n <= got.max_degree() && n <= want.max_degree(); ++n) {
        if (got[n] != want[n]) {
            std::ostringstream os;
            os << what << ": got " << got[n] << ", expected " << want[n];
            rep.fail(column, n, os.str());
            return;
        }
    }
}

void spot(CheckReport& rep, const Series& s, int n, std::int64_t want, const std::string& what) {
    ++rep.checked;
    if (s[n] != want) {
        std::ostringstream os;
        os << what << ": c_" << n << " = " << s[n] << ", expected " << want;
        rep.fail(-1, n, os.str());
    }
}

}  // namespace

std::vector<ColumnBound> standard_bounds() {
    return {1, 2, 3, 4, 5, 6, std::nullopt};
}

CheckReport oracle_agreement(int d, int max_level, int max_degree) {
    CheckReport rep;
    rep.name = "oracle agreement d=" + std::to_string(d);
    for (int level = 1; level <= max_level; ++level) rep.merge(oracle_crosscheck(d, level, max_degree));
    // The assembled bases must have the sizes the content tables predict.
    for (int k = 0; k <= max_level; ++k) {
        Series table = column_series(d, k, max_degree);
        Series built(max_degree);
        for (int n = 0; n <= max_degree; ++n) built.at(n) = static_cast<std::int64_t>(build_basis(d, k, n).size());
        compare_series(rep, k, built, table, "basis size");
    }
    return rep;
}

CheckReport d_squared(int d, int max_column, int max_degree, const DifferentialOptions& opt) {
    return d_squared_check(d, max_column, max_degree, opt);
}

CheckReport collapse(int d, int max_degree, const DifferentialOptions& opt) {
    return collapse_check(d, max_degree, 2, 5, opt);
}

CheckReport closed_form_match(int d, const ColumnBound& r, int max_degree, const DifferentialOptions& opt) {
    CheckReport rep;
    rep.name = "closed form d=" + std::to_string(d) + " R=" + bound_name(r);
    auto cf = closed_form(d, r, max_degree);
    if (!cf) {
        rep.notes.push_back("no closed form encoded");
        return rep;
    }
    PageReport page;
    try {
        page = e2_ranks(d, r, max_degree, opt);
    } catch (const std::logic_error& e) {
        rep.fail(-1, -1, std::string("inconsistent page: ") + e.what());
        return rep;
    }
    compare_series(rep, -1, page.total_series, cf->series, "total rank");
    for (const auto& note : cf->notes) rep.notes.push_back(note);

    if (d == 4) {
        const Series& c = page.total_series;
        if (!r) {
            spot(rep, c, 4, 1, "R=inf");
            spot(rep, c, 5, 0, "R=inf");
            spot(rep, c, 13, 1, "R=inf");
        } else if (*r == 1) {
            spot(rep, c, 5, 2, "R=1");
        } else if (*r == 2) {
            // the column-2 Euler block t^{10}(skew(2,2) + P(0,4)) is the only degree-10 contribution
            Series block = (skew_series(2, max_degree) + full_series(0, 4, max_degree)).shifted(10);
            spot(rep, c, 10, block[10], "R=2 block");
            spot(rep, page.column_e2_series(2), 10, 1, "R=2 column 2");
        }
    }
    return rep;
}

CheckReport generator_suite(int d, int max_degree) { return verify_generators(d, max_degree); }

CheckReport symmetrization(int s, int max_degree) {
    CheckReport rep;
    rep.name = "symmetrization s=" + std::to_string(s);
    const int h = 2 * s;
    compare_series(rep, -1, bso_series(4 * s, max_degree) + skew_series(h, max_degree),
                   full_series(h, h, max_degree), "s=" + std::to_string(s) + ": P(4s) + skew(2s,2s) vs P(2s,2s)");
    const VariableSet target(h, h);
    const Series sym = sym_series(h, max_degree);
    for (int n = 0; n <= max_degree; n += 4) {
        auto coords = enumerate_monomials(target, n);
        std::map<Monomial, std::size_t> pos;
        for (std::size_t i = 0; i < coords.size(); ++i) pos.emplace(coords[i], i);
        RowEchelon span;
        long symmetric = 0;
        auto sources = enumerate_monomials(VariableSet::single(4 * s), n);
        for (const auto& m : sources) {
            Polynomial img = s_hom(m, target);
            if (swap(img) == img) ++symmetric;
            SparseVector v;
            for (const auto& [mono, c] : img.terms()) v[pos.at(mono)] = c;
            span.insert(v);
        }
        ++rep.checked;
        long rk = static_cast<long>(span.rank());
        if (rk != sym[n] || rk != static_cast<long>(sources.size()) ||
            symmetric != static_cast<long>(sources.size())) {
            std::ostringstream os;
            os << "s=" << s << ": image rank " << rk << " from " << sources.size() << " monomials, symmetric part rank " << sym[n];
            rep.fail(-1, n, os.str());
        }
    }
    return rep;
}

CheckReport fold_wedge(int d, int max_degree) {
    CheckReport rep;
    rep.name = "fold wedge d=" + std::to_string(d);
    Series want = full_series(0, d + 1, max_degree);
    for (int a = 1; 2 * a <= d; ++a) want += full_series(a, d + 1 - a, max_degree).shifted(d + 1);
    compare_series(rep, -1, e2_ranks(d, 1, max_degree).total_series, want, "first truncation");
    return rep;
}

CheckReport mmm_survival(int d, const ColumnBound& r, int max_degree) {
    CheckReport rep;
    rep.name = "column-0 survival d=" + std::to_string(d) + " R=" + bound_name(r);
    PageReport page = e2_ranks(d, r, max_degree);
    compare_series(rep, 0, page.column_e2_series(0), mmm_subseries(d, max_degree), "column 0");
    return rep;
}

CheckReport free_gca_sanity(int max_degree) {
    CheckReport rep;
    rep.name = "free algebra sanity";
    const int D = max_degree;

    Series even(D), odd(D), mixed(D);
    for (int n = 0; n <= D; n += 2) even.at(n) = 1;
    odd.at(0) = 1;
    if (D >= 3) odd.at(3) = 1;
    // 1/(1-t^4) * (1+t^13)
    for (int n = 0; n <= D; n += 4) mixed.at(n) = 1;
    for (int n = 13; n <= D; n += 4) mixed.at(n) += 1;

    GeneratorSpectrum g2{Series::monomial(D, 2)};
    GeneratorSpectrum g3{Series::monomial(D, 3)};
    GeneratorSpectrum g4_13{Series::monomial(D, 4) + Series::monomial(D, 13)};
    compare_series(rep, -1, free_gca_series(g2, D), even, "one even generator");
    compare_series(rep, -1, free_gca_series(g3, D), odd, "one odd generator");
    compare_series(rep, -1, free_gca_series(g4_13, D), mixed, "generators in degrees 4 and 13");
    compare_series(rep, -1, free_gca_series(GeneratorSpectrum{Series(D)}, D), Series::one(D), "no generators");
    return rep;
}

CheckReport mutation_sensitivity(int d, int max_degree) {
    CheckReport rep;
    rep.name = "mutation sensitivity d=" + std::to_string(d);
    const DifferentialOptions mutants[] = {
        {true, false},
        {false, true},
    };
    const char* names[] = {"flipped alternation out of column 0", "dropped doubling at a = b"};
    for (int i = 0; i < 2; ++i) {
        CheckReport probe;
        probe.merge(d_squared(d, 5, max_degree, mutants[i]));
        probe.merge(collapse(d, max_degree, mutants[i]));
        for (const auto& r : standard_bounds()) probe.merge(closed_form_match(d, r, max_degree, mutants[i]));
        ++rep.checked;
        if (probe.passed()) {
            rep.fail(-1, -1, std::string(names[i]) + " went undetected");
        } else {
            const auto& f = probe.failures.front();
            std::ostringstream os;
            os << names[i] << ": caught " << probe.failures.size() << " failures, first at column "
               << f.column << " degree " << f.degree;
            rep.notes.push_back(os.str());
        }
    }
    return rep;
}

}  // namespace morin::verification
