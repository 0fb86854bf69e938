#include "cli.hpp"

#include "morin/action_oracle.hpp"
#include "morin/e1_page.hpp"
#include "morin/loopspace.hpp"
#include "morin/page_engine.hpp"
#include "morin/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>

namespace morin::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string verb;
    std::optional<int> dim;
    std::string r = "inf";
    int max_degree = 40;
    std::string format = "table";
    std::string space;
    std::optional<int> column;
    std::optional<int> degree;
    int shift = 0;
    bool strict = false;
    std::string out;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// What a verb produces before formatting.
struct Emission {
    std::optional<Series> series;
    json report = json::array();
    std::vector<std::string> table;  // lines for the table format
    bool ok = true;
    std::optional<CheckFailure> first_failure;
};

ColumnBound parse_bound(const std::string& s) {
    if (s == "inf") return std::nullopt;
    static const std::regex digits("[0-9]+");
    if (!std::regex_match(s, digits)) throw UsageError("--r must be a nonnegative integer or 'inf'");
    return std::stoi(s);
}

FlavoredSpace parse_space(const std::string& s) {
    static const std::regex pair_re("(p|sp|ap):([0-9]+),([0-9]+)");
    static const std::regex single_re("b:([0-9]+)");
    std::smatch m;
    if (std::regex_match(s, m, pair_re)) {
        int a = std::stoi(m[2]), b = std::stoi(m[3]);
        if (m[1] == "p") return FlavoredSpace::full(a, b);
        if (VariableSet(a, b).unprimed_count() != VariableSet(a, b).primed_count())
            throw UsageError("--space: symmetric and skew parts need a square variable set");
        return m[1] == "sp" ? FlavoredSpace::sym(a, b) : FlavoredSpace::skew(a, b);
    }
    if (std::regex_match(s, m, single_re)) return FlavoredSpace::single(std::stoi(m[1]));
    throw UsageError("--space must look like p:a,b, sp:a,b, ap:a,b or b:d");
}

int require_dim(const Options& o) {
    if (!o.dim) throw UsageError("--dim is required for '" + o.verb + "'");
    if (*o.dim < 1) throw UsageError("--dim must be >= 1");
    return *o.dim;
}

json series_json(const Series& s) { return json(s.coefficients()); }

void note_check(Emission& em, const CheckReport& rep, bool asserted = true) {
    json entry;
    entry["check"] = rep.name;
    entry["passed"] = rep.passed();
    entry["asserted"] = asserted;
    entry["comparisons"] = rep.checked;
    json fails = json::array();
    for (const auto& f : rep.failures)
        fails.push_back(json{{"column", f.column}, {"degree", f.degree}, {"detail", f.detail}});
    entry["failures"] = fails;
    entry["notes"] = rep.notes;
    em.report.push_back(entry);

    std::string status = rep.passed() ? "PASS" : (asserted ? "FAIL" : "DIFF");
    std::string line = status + "  " + rep.name;
    if (!rep.passed()) {
        const auto& f = rep.failures.front();
        line += ": column " + std::to_string(f.column) + " degree " + std::to_string(f.degree) + ": " + f.detail;
        if (!asserted) line += " (reported, not asserted)";
    }
    em.table.push_back(line);
    for (const auto& n : rep.notes) em.table.push_back("      note: " + n);

    if (!rep.passed() && asserted) {
        if (em.ok) em.first_failure = rep.failures.front();
        em.ok = false;
    }
}

// ------------------------------------------------------------------ verbs

Emission do_series(const Options& o) {
    if (o.space.empty()) throw UsageError("'series' needs --space");
    Emission em;
    em.series = space_series(parse_space(o.space), o.max_degree);
    em.report.push_back(json{{"space", o.space}});
    return em;
}

Emission do_e1(const Options& o) {
    const int d = require_dim(o);
    if (!o.column || *o.column < 0) throw UsageError("'e1' needs --column k with k >= 0");
    Emission em;
    em.series = column_series(d, *o.column, o.max_degree);
    if (o.degree) {
        IndexedBasis basis = build_basis(d, *o.column, *o.degree);
        for (const auto& e : basis.elements()) {
            em.report.push_back(json{{"degree", e.degree()}, {"element", e.label()}});
            em.table.push_back(e.label());
        }
    }
    return em;
}

Emission do_e2(const Options& o) {
    const int d = require_dim(o);
    const ColumnBound r = parse_bound(o.r);
    PageReport page = e2_ranks(d, r, o.max_degree);
    Emission em;
    em.series = page.total_series;
    std::ostringstream head;
    head << std::setw(6) << "column" << std::setw(7) << "degree" << std::setw(6) << "e1" << std::setw(6) << "d"
         << std::setw(7) << "ker" << std::setw(7) << "im" << std::setw(6) << "e2";
    em.table.push_back(head.str());
    for (const auto& st : page.entries) {
        em.report.push_back(json{{"column", st.column},
                                 {"degree", st.degree},
                                 {"e1_rank", st.e1_rank},
                                 {"d_rank", st.d_rank},
                                 {"kernel_rank", st.kernel_rank},
                                 {"image_rank_from_left", st.image_rank_from_left},
                                 {"e2_rank", st.e2_rank}});
        std::ostringstream os;
        os << std::setw(6) << st.column << std::setw(7) << st.degree << std::setw(6) << st.e1_rank << std::setw(6)
           << st.d_rank << std::setw(7) << st.kernel_rank << std::setw(7) << st.image_rank_from_left << std::setw(6)
           << st.e2_rank;
        em.table.push_back(os.str());
    }
    if (page.comparison) {
        const auto& c = *page.comparison;
        json cmp{{"closed_form", series_json(c.expected)}, {"notes", c.notes}};
        cmp["first_mismatch"] = c.first_mismatch ? json(*c.first_mismatch) : json(nullptr);
        em.report.push_back(json{{"comparison", cmp}});
        em.table.push_back(c.first_mismatch ? "closed form differs from degree " + std::to_string(*c.first_mismatch)
                                            : std::string("closed form matches"));
    } else {
        em.report.push_back(json{{"comparison", nullptr}});
        em.table.push_back("no closed form encoded");
    }
    return em;
}

std::string combination_string(const Combination& c) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, coef] : c) {
        if (!first) os << (coef < 0 ? " - " : " + ");
        else if (coef < 0) os << "-";
        first = false;
        mpq_class a = abs(coef);
        if (a != 1) os << a.get_str() << '*';
        os << e.label();
    }
    return first ? "0" : os.str();
}

Emission do_generators(const Options& o) {
    const int d = require_dim(o);
    Emission em;
    Series counts(o.max_degree);
    for (const auto& g : kernel_generator_classes(d, o.max_degree)) {
        counts.at(g.degree) += 1;
        std::string expansion = combination_string(g.expansion);
        em.report.push_back(json{{"kind", kind_name(g.kind)},
                                 {"label", g.label},
                                 {"degree", g.degree},
                                 {"expansion", expansion}});
        em.table.push_back(std::to_string(g.degree) + "  " + g.label + " = " + expansion);
    }
    em.series = counts;
    note_check(em, verify_generators(d, o.max_degree));
    return em;
}

Emission do_oracle(const Options& o) {
    const int d = require_dim(o);
    Emission em;
    int lo = 1, hi = 7;
    if (o.column) {
        if (*o.column < 1) throw UsageError("'oracle' needs --column >= 1");
        lo = hi = *o.column;
        Series total(o.max_degree);
        for (const auto& s : enumerate_strata(d, lo)) total += invariant_series(s, o.max_degree);
        em.series = total;
    }
    for (int k = lo; k <= hi; ++k) note_check(em, oracle_crosscheck(d, k, o.max_degree));
    return em;
}

Emission do_verify(const Options& o) {
    namespace v = morin::verification;
    const int d = require_dim(o);
    const ColumnBound r = parse_bound(o.r);
    const int D = o.max_degree;
    Emission em;
    em.series = e2_ranks(d, r, D).total_series;

    note_check(em, v::oracle_agreement(d, 7, D));
    note_check(em, v::d_squared(d, 5, D));
    note_check(em, v::collapse(d, std::max(0, D - 4)));
    if (r && *r == 0) {
        em.table.push_back("SKIP  closed form: no closed form encoded for R=0");
    } else {
        note_check(em, v::closed_form_match(d, r, D), d == 4 || o.strict);
    }
    note_check(em, v::generator_suite(d, D));
    if (d % 4 == 0) note_check(em, v::symmetrization(d / 4, D + 8));
    if (d % 2 == 0) note_check(em, v::fold_wedge(d, D));
    if (!r || *r >= 1) note_check(em, v::mmm_survival(d, r, D));
    note_check(em, v::free_gca_sanity(16));
    if (d == 4) note_check(em, v::mutation_sensitivity(d, std::min(D, 20)));
    return em;
}

Emission do_loopspace(const Options& o) {
    const int d = require_dim(o);
    const ColumnBound r = parse_bound(o.r);
    Emission em;
    PageReport page = e2_ranks(d, r, std::max(o.max_degree, o.max_degree - o.shift));
    GeneratorSpectrum g = spectrum_from_page(page, o.shift);
    g.ranks = g.ranks.truncated(o.max_degree);
    em.series = free_gca_series(g, o.max_degree);
    Series mmm = mmm_subseries(d, o.max_degree);
    em.report.push_back(json{{"generators", series_json(g.ranks)}});
    em.report.push_back(json{{"mmm_subseries", series_json(mmm)}});
    em.table.push_back("generators: " + g.ranks.to_string());
    em.table.push_back("mmm subseries: " + mmm.to_string());
    return em;
}

// -------------------------------------------------------------- formatting

std::string format_output(const Options& o, const Emission& em) {
    std::ostringstream os;
    if (o.format == "json") {
        json j;
        j["dim"] = o.dim ? json(*o.dim) : json(nullptr);
        if (o.r == "inf") j["r"] = "inf";
        else j["r"] = std::stoi(o.r);
        j["max_degree"] = o.max_degree;
        j["series"] = em.series ? series_json(*em.series) : json::array();
        j["report"] = em.report;
        if (em.first_failure)
            j["first_failure"] = json{{"column", em.first_failure->column}, {"degree", em.first_failure->degree}};
        os << j.dump(2) << '\n';
        return os.str();
    }
    if (o.format == "csv") {
        os << "degree,value\n";
        if (em.series)
            for (int n = 0; n <= em.series->max_degree(); ++n) os << n << ',' << (*em.series)[n] << '\n';
        if (em.first_failure)
            os << "# first failure: column " << em.first_failure->column << ", degree " << em.first_failure->degree
               << '\n';
        return os.str();
    }
    if (em.series && o.verb != "verify" && o.verb != "generators") os << em.series->to_string() << '\n';
    for (const auto& line : em.table) os << line << '\n';
    if (em.first_failure)
        os << "first failure: column " << em.first_failure->column << ", degree " << em.first_failure->degree << '\n';
    return os.str();
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--dim", o.dim, "map dimension d");
    sub->add_option("--r", o.r, "column bound R (integer or 'inf')");
    sub->add_option("--max-degree", o.max_degree, "truncation degree")->check(CLI::Range(0, 400));
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--out", o.out, "also write the output to this file");
}

}  // namespace

Result run(const std::vector<std::string>& args) {
    Options o;
    CLI::App app{"Exact first and second pages of the Morin singularity spectral sequence", "morin"};
    app.require_subcommand(1);

    struct Verb {
        const char* name;
        const char* help;
    };
    const Verb verbs[] = {
        {"series", "rank series of a polynomial space"},
        {"e1", "first-page column ranks and bases"},
        {"e2", "second-page ranks and total cohomology series"},
        {"generators", "kernel generators of the fold differential"},
        {"oracle", "cross-check column contents against the symmetry oracle"},
        {"verify", "run the acceptance checks for one dimension"},
        {"loopspace", "series of the free graded-commutative characteristic-class algebra"},
    };
    for (const auto& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        add_common(sub, o);
        std::string name = v.name;
        if (name == "series") sub->add_option("--space", o.space, "p:a,b | sp:a,b | ap:a,b | b:d");
        if (name == "e1" || name == "oracle") sub->add_option("--column", o.column, "column (stratum level)");
        if (name == "e1") sub->add_option("--degree", o.degree, "list the basis in this degree");
        if (name == "loopspace") sub->add_option("--shift", o.shift, "degree offset applied to generators");
        if (name == "verify") sub->add_flag("--strict", o.strict, "assert closed forms for every dimension");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {kOk, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {kOk, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        return {kUsage, std::string(e.what()) + "\n" + app.help()};
    }
    for (auto* sub : app.get_subcommands()) o.verb = sub->get_name();

    Emission em;
    try {
        if (o.verb == "series") em = do_series(o);
        else if (o.verb == "e1") em = do_e1(o);
        else if (o.verb == "e2") em = do_e2(o);
        else if (o.verb == "generators") em = do_generators(o);
        else if (o.verb == "oracle") em = do_oracle(o);
        else if (o.verb == "verify") em = do_verify(o);
        else em = do_loopspace(o);
    } catch (const UsageError& e) {
        return {kUsage, std::string("error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {kUsage, std::string("error: ") + e.what() + "\n"};
    }

    Result res{em.ok ? kOk : kMismatch, format_output(o, em)};
    if (!o.out.empty()) {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) return {kUsage, "error: cannot write " + o.out + "\n"};
        f << res.output;
    }
    return res;
}

}  // namespace morin::cli
