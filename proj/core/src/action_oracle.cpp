#include "morin/action_oracle.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace morin {

ActionGen ActionGen::identity(std::string name) {
    ActionGen g;
    g.name = std::move(name);
    for (int i = 0; i < kSymbolCount; ++i) g.image[i] = SignedSymbol{static_cast<Symbol>(i), 1};
    return g;
}

ActionGen& ActionGen::set(Symbol from, Symbol to, int sign) {
    image[static_cast<int>(from)] = SignedSymbol{to, sign};
    return *this;
}

ActionGen ActionGen::compose(const ActionGen& h) const {
    ActionGen r = identity(name + "*" + h.name);
    for (int i = 0; i < kSymbolCount; ++i) {
        const SignedSymbol& hi = h.image[i];
        const SignedSymbol& ghi = (*this)(hi.symbol);
        r.image[i] = SignedSymbol{ghi.symbol, hi.sign * ghi.sign};
    }
    r.swap_pontryagin = swap_pontryagin != h.swap_pontryagin;
    return r;
}

int AmbientBasisElement::degree(const Stratum& s) const {
    return s.thom_degree() + s.a * euler_a + s.b * euler_b + monomial.degree();
}

bool AmbientBasisElement::operator<(const AmbientBasisElement& o) const {
    return std::tie(sheet, euler_a, euler_b, monomial) <
           std::tie(o.sheet, o.euler_a, o.euler_b, o.monomial);
}

namespace {

// Sheet reflection: every sheet Thom class and Euler class changes sign.
ActionGen make_beta() {
    ActionGen g = ActionGen::identity("beta");
    g.set(Symbol::ThomA, Symbol::ThomA, -1).set(Symbol::ThomB, Symbol::ThomB, -1);
    g.set(Symbol::EulerA, Symbol::EulerA, -1).set(Symbol::EulerB, Symbol::EulerB, -1);
    return g;
}

// Exchange of the two sheets, with sign on the second image.
ActionGen make_exchange(int sign_a, int sign_b, int tail) {
    ActionGen g = ActionGen::identity("alpha");
    g.set(Symbol::ThomA, Symbol::ThomB, sign_a).set(Symbol::ThomB, Symbol::ThomA, sign_b);
    g.set(Symbol::EulerA, Symbol::EulerB, sign_a).set(Symbol::EulerB, Symbol::EulerA, sign_b);
    g.set(Symbol::ThomTail, Symbol::ThomTail, tail);
    g.swap_pontryagin = true;
    return g;
}

bool has_euler_a(const Stratum& s) { return s.a > 0 && s.a % 2 == 0; }
bool has_euler_b(const Stratum& s) { return s.b > 0 && s.b % 2 == 0; }

}  // namespace

std::vector<ActionGen> symmetry_action(const Stratum& s) {
    if (s.level < 1) throw std::invalid_argument("symmetry_action: level must be >= 1");
    std::vector<ActionGen> gens;
    const int k = s.level;

    if (k % 2 == 1 && k >= 3) {
        int r = (k - 1) / 2;
        int tail = (r + 1) % 2 == 0 ? 1 : -1;
        ActionGen alpha = ActionGen::identity("alpha");
        alpha.set(Symbol::ThomTail, Symbol::ThomTail, tail);
        if (s.a > 0) {
            alpha.set(Symbol::ThomA, Symbol::ThomA, -1).set(Symbol::EulerA, Symbol::EulerA, -1);
        } else {
            // No reflection exists on a zero-dimensional sheet; use the other one.
            alpha.set(Symbol::ThomB, Symbol::ThomB, -1).set(Symbol::EulerB, Symbol::EulerB, -1);
        }
        gens.push_back(alpha);
        if (s.a > 0) gens.push_back(make_beta());
        return gens;
    }

    // Folds and even levels. With a = 0 the group is connected.
    if (s.a == 0) return gens;
    if (s.a == s.b) {
        if (k == 1) {
            if (s.a % 2 == 0) gens.push_back(make_exchange(-1, 1, 1));
            else gens.push_back(make_exchange(1, 1, 1));
        } else {
            int r = k / 2;
            int tail = r % 2 == 0 ? 1 : -1;
            if (s.a % 2 == 0) gens.push_back(make_exchange(1, 1, tail));
            else gens.push_back(make_exchange(1, -1, tail));
        }
    }
    gens.push_back(make_beta());
    return gens;
}

std::vector<ActionGen> generated_group(const Stratum& s) {
    std::vector<ActionGen> group{ActionGen::identity()};
    auto gens = symmetry_action(s);
    for (std::size_t i = 0; i < group.size(); ++i) {
        for (const auto& g : gens) {
            ActionGen x = g.compose(group[i]);
            bool seen = false;
            for (const auto& y : group) seen = seen || y.same_action(x);
            if (!seen) group.push_back(x);
        }
        if (group.size() > 64) throw std::logic_error("generated_group: group is not finite");
    }
    return group;
}

std::vector<AmbientBasisElement> ambient_basis(const Stratum& s, int degree) {
    std::vector<AmbientBasisElement> out;
    ThomSheet sheet = ThomSheet::Single;
    if (s.sign == Sign::Plus) sheet = ThomSheet::Prime;
    if (s.sign == Sign::Minus) sheet = ThomSheet::DoublePrime;
    const VariableSet vars(s.a, s.b);
    for (int ea = 0; ea <= (has_euler_a(s) ? 1 : 0); ++ea) {
        for (int eb = 0; eb <= (has_euler_b(s) ? 1 : 0); ++eb) {
            int rest = degree - s.thom_degree() - s.a * ea - s.b * eb;
            for (auto& m : enumerate_monomials(vars, rest))
                out.push_back(AmbientBasisElement{sheet, ea, eb, std::move(m)});
        }
    }
    return out;
}

std::pair<AmbientBasisElement, int> apply(const ActionGen& g, const Stratum& s,
                                          const AmbientBasisElement& x) {
    int sign = 1;
    // Koszul sign for exchanging two factors of degrees a and b.
    const int koszul = (s.a * s.b) % 2 == 0 ? 1 : -1;

    const SignedSymbol& ua = g(Symbol::ThomA);
    const SignedSymbol& ub = g(Symbol::ThomB);
    sign *= ua.sign * ub.sign * g(Symbol::ThomTail).sign;
    if (ua.symbol == Symbol::ThomB) {
        if (s.a != s.b) throw std::logic_error("apply: sheet exchange needs a = b");
        sign *= koszul;
    }

    AmbientBasisElement y = x;
    y.euler_a = y.euler_b = 0;
    int swaps = 0;
    auto place = [&](Symbol from) {
        const SignedSymbol& img = g(from);
        sign *= img.sign;
        if (img.symbol != from) ++swaps;
        if (img.symbol == Symbol::EulerA) y.euler_a = 1;
        else y.euler_b = 1;
    };
    if (x.euler_a) place(Symbol::EulerA);
    if (x.euler_b) place(Symbol::EulerB);
    if (x.euler_a && x.euler_b && swaps == 2) sign *= koszul;

    if (g.swap_pontryagin) {
        if (!VariableSet(s.a, s.b).square())
            throw std::logic_error("apply: variable exchange needs a square variable set");
        y.monomial = x.monomial.swapped();
    }
    return {y, sign};
}

Series invariant_series(const Stratum& s, int max_degree) {
    const auto gens = symmetry_action(s);
    Series out(max_degree);
    for (int n = 0; n <= max_degree; ++n) {
        auto basis = ambient_basis(s, n);
        std::map<AmbientBasisElement, int> seen;  // element -> sign relative to orbit root
        std::int64_t count = 0;
        for (const auto& root : basis) {
            if (seen.count(root)) continue;
            bool consistent = true;
            std::vector<AmbientBasisElement> queue{root};
            seen[root] = 1;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                AmbientBasisElement cur = queue[i];
                int cur_sign = seen[cur];
                for (const auto& g : gens) {
                    auto [img, sg] = apply(g, s, cur);
                    int want = cur_sign * sg;
                    auto it = seen.find(img);
                    if (it == seen.end()) {
                        seen.emplace(img, want);
                        queue.push_back(img);
                    } else if (it->second != want) {
                        consistent = false;
                    }
                }
            }
            if (consistent) ++count;
        }
        out.at(n) = count;
    }
    return out;
}

CheckReport oracle_crosscheck(int d, int level, int max_degree) {
    CheckReport rep;
    std::ostringstream name;
    name << "oracle d=" << d << " level=" << level;
    rep.name = name.str();
    for (const auto& s : enumerate_strata(d, level)) {
        Series oracle = invariant_series(s, max_degree);
        Series table = stratum_series(s, max_degree);
        ++rep.checked;
        for (int n = 0; n <= max_degree; ++n) {
            if (oracle[n] != table[n]) {
                std::ostringstream os;
                os << s.label() << ": invariants " << oracle[n] << " vs content " << table[n];
                rep.fail(level, n, os.str());
                break;
            }
        }
    }
    return rep;
}

}  // namespace morin
