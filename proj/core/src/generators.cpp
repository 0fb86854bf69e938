#include "morin/page_engine.hpp"

#include <sstream>

namespace morin {

std::string kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::AlternatingSum: return "alternating";
        case GeneratorKind::TopSum: return "top";
        case GeneratorKind::Euler: return "euler";
        case GeneratorKind::EulerTop: return "euler_top";
    }
    return "?";
}

namespace {

// sum over a = 0..top of (-1)^a U_{a,d+1-a} * restrict(p)
Combination alternating_fold_sum(int d, int top, const Polynomial& p) {
    Combination out;
    for (int a = 0; a <= top; ++a) {
        Stratum t = Stratum::make(d, 1, a);
        accumulate(out, thom_combination(t, false, restrict(p, t.vars())), a % 2 ? -1 : 1);
    }
    return out;
}

void add_alternating(std::vector<GeneratorClass>& out, int d, int j, int index, int a_top, int b_top, int D) {
    const VariableSet vars(a_top, b_top);
    for (int n = 0; d + 1 + n <= D; n += 4) {
        for (const auto& m : enumerate_monomials(vars, n)) {
            if (m.exponent_prime(index) == 0) continue;
            GeneratorClass g;
            g.kind = GeneratorKind::AlternatingSum;
            g.index = index;
            g.data = Polynomial(vars, m);
            g.degree = d + 1 + n;
            g.expansion = alternating_fold_sum(d, a_top, g.data);
            std::ostringstream os;
            os << "alt_" << index << "[j=" << j << ", p=" << m.to_string() << ']';
            g.label = os.str();
            out.push_back(std::move(g));
        }
    }
}

}  // namespace

std::vector<GeneratorClass> kernel_generator_classes(int d, int D) {
    std::vector<GeneratorClass> out;
    const int s = d / 4;

    if (d % 2 == 0) {
        const bool four_s = d % 4 == 0;
        const int top_j = four_s ? s - 1 : s;
        for (int j = 0; j <= top_j; ++j) {
            int index = (four_s ? 2 * s : 2 * s + 1) - j;
            add_alternating(out, d, j, index, 2 * j + 1, d - 2 * j, D);
        }
        // top-sum classes are the images of e*m out of column 0.
        const VariableSet single = VariableSet::single(d);
        for (int n = 0; d + 1 + n <= D; n += 4) {
            for (const auto& m : enumerate_monomials(single, n)) {
                GeneratorClass g;
                g.kind = GeneratorKind::TopSum;
                g.data = s_hom(m, VariableSet(d, d));
                g.flavor = Flavor::Sym;
                g.degree = d + 1 + n;
                for (int a = 0; 2 * a <= d; ++a) {
                    Stratum t = Stratum::make(d, 1, a);
                    accumulate(g.expansion, thom_combination(t, false, s_hom(m, t.vars())), a % 2 ? -1 : 1);
                }
                g.label = "top[Q=s(" + m.to_string() + ")]";
                out.push_back(std::move(g));
            }
        }
        return out;
    }

    const int h = (d + 1) / 2;
    for (int a = 0; a <= 2 * s; a += 2) {
        const int b = d + 1 - a;
        const Stratum t = Stratum::make(d, 1, a);
        for (int n = 0; 2 * (d + 1) + n <= D; n += 4) {
            for (const auto& m : enumerate_monomials(t.vars(), n)) {
                GeneratorClass g;
                g.kind = GeneratorKind::Euler;
                g.index = a;
                g.data = Polynomial(t.vars(), m);
                g.degree = 2 * (d + 1) + n;
                g.expansion = thom_combination(t, true, g.data);
                std::ostringstream os;
                os << "euler[a=" << a << ",b=" << b << ", Q=e*" << m.to_string() << ']';
                g.label = os.str();
                out.push_back(std::move(g));
            }
        }
    }
    if (d % 4 == 3) {
        const Stratum t = Stratum::make(d, 1, h);
        const ContentPiece sym{true, Flavor::Sym, ThomFlavor::U};
        for (int n = 0; 2 * (d + 1) + n <= D; n += 4) {
            for (const auto& e : piece_elements(t, sym, 2 * (d + 1) + n)) {
                GeneratorClass g;
                g.kind = GeneratorKind::EulerTop;
                g.index = h;
                g.data = e.polynomial();
                g.flavor = Flavor::Sym;
                g.degree = e.degree();
                g.expansion = thom_combination(t, true, g.data);
                g.label = "euler_top[Q=e*(" + g.data.to_string() + ")]";
                out.push_back(std::move(g));
            }
        }
    }
    for (int j = 0; j <= s; ++j) add_alternating(out, d, j, h - j, 2 * j, d + 1 - 2 * j, D);

    const Stratum top = Stratum::make(d, 1, h);
    const ContentPiece skew{false, Flavor::Skew, ThomFlavor::U};
    for (int n = 0; d + 1 + n <= D; n += 4) {
        for (const auto& e : piece_elements(top, skew, d + 1 + n)) {
            GeneratorClass g;
            g.kind = GeneratorKind::TopSum;
            g.data = e.polynomial();
            g.flavor = Flavor::Skew;
            g.degree = e.degree();
            g.expansion = alternating_fold_sum(d, h, g.data);
            g.label = "top[Q=" + g.data.to_string() + "]";
            out.push_back(std::move(g));
        }
    }
    return out;
}

CheckReport verify_generators(int d, int D) {
    CheckReport rep;
    rep.name = "generators d=" + std::to_string(d);
    const auto classes = kernel_generator_classes(d, D);
    const bool even = d % 2 == 0;

    for (int n = 0; n <= D; ++n) {
        LinearMap fold = assemble_matrix(d, 1, n);
        if (fold.source.empty()) continue;
        RowEchelon image;
        if (n >= 1) {
            LinearMap reg = assemble_matrix(d, 0, n - 1);
            for (std::size_t j = 0; j < reg.matrix.cols(); ++j) image.insert(reg.matrix.column(j));
        }
        const long image_rank = static_cast<long>(image.rank());
        const long e2 = static_cast<long>(fold.source.size()) - static_cast<long>(fold.matrix.rank()) - image_rank;

        RowEchelon span = image;
        long remaining = 0;
        for (const auto& g : classes) {
            if (g.degree != n) continue;
            SparseVector v = coordinates(g.expansion, fold.source);
            ++rep.checked;
            if (!fold.matrix.apply(v).empty()) rep.fail(1, n, g.label + " is not a cycle");
            if (even && g.kind == GeneratorKind::TopSum) {
                if (!image.in_span(v)) rep.fail(1, n, g.label + " is not a boundary");
                continue;
            }
            ++remaining;
            span.insert(v);
        }
        const long gained = static_cast<long>(span.rank()) - image_rank;
        if (gained != e2) {
            std::ostringstream os;
            os << "classes span rank " << gained << " but E2 column-1 rank is " << e2;
            rep.fail(1, n, os.str());
        } else if (gained != remaining) {
            std::ostringstream os;
            os << remaining << " classes for a quotient of rank " << gained;
            rep.notes.push_back("degree " + std::to_string(n) + ": " + os.str());
        }
    }
    return rep;
}

}  // namespace morin
