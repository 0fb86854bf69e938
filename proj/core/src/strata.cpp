#include "morin/strata.hpp"

#include <sstream>
#include <stdexcept>

namespace morin {

Stratum Stratum::regular(int d) {
    if (d < 1) throw std::invalid_argument("Stratum: dimension must be >= 1");
    return Stratum{d, 0, 0, 0, Sign::None};
}

Stratum Stratum::make(int d, int level, int a, Sign sign) {
    if (d < 1) throw std::invalid_argument("Stratum: dimension must be >= 1");
    if (level < 1) throw std::invalid_argument("Stratum::make: use regular() for level 0");
    int b = (level == 1 ? d + 1 : d) - a;
    if (a < 0 || a > b) throw std::invalid_argument("Stratum::make: need 0 <= a <= b");
    bool signed_level = level >= 3 && level % 2 == 1 && a < b;
    if (signed_level == (sign == Sign::None))
        throw std::invalid_argument("Stratum::make: sign does not match level and (a,b)");
    return Stratum{d, level, a, b, sign};
}

int Stratum::thom_degree() const {
    if (level == 0) return 0;
    if (level == 1) return dim + 1;
    return dim + level;
}

int Stratum::euler_degree() const { return level == 0 ? dim : a + b; }

VariableSet Stratum::vars() const {
    return level == 0 ? VariableSet::single(dim) : VariableSet(a, b);
}

std::string Stratum::label() const {
    if (level == 0) return "A0";
    std::ostringstream os;
    os << 'A' << level << '(' << a << ',' << b << ')';
    if (sign == Sign::Plus) os << '+';
    if (sign == Sign::Minus) os << '-';
    return os.str();
}

std::string ContentPiece::label() const {
    std::string s;
    switch (thom) {
        case ThomFlavor::None: break;
        case ThomFlavor::U: s = "U*"; break;
        case ThomFlavor::UPlus: s = "U+*"; break;
        case ThomFlavor::UMinus: s = "U-*"; break;
    }
    if (euler) s += "e*";
    return s + flavor_name(flavor);
}

std::vector<Stratum> enumerate_strata(int d, int level) {
    if (d < 1 || level < 0) throw std::invalid_argument("enumerate_strata: need d >= 1, level >= 0");
    if (level == 0) return {Stratum::regular(d)};
    std::vector<Stratum> out;
    int total = level == 1 ? d + 1 : d;
    bool signed_level = level >= 3 && level % 2 == 1;
    for (int a = 0; 2 * a <= total; ++a) {
        if (signed_level && 2 * a < total) {
            out.push_back(Stratum::make(d, level, a, Sign::Plus));
            out.push_back(Stratum::make(d, level, a, Sign::Minus));
        } else {
            out.push_back(Stratum::make(d, level, a));
        }
    }
    return out;
}

bool euler_available(const Stratum& s) {
    if (s.level == 0) return s.dim % 2 == 0;
    return s.a % 2 == 0 && s.b % 2 == 0;
}

std::vector<ContentPiece> column_content(const Stratum& s) {
    const bool e_ok = euler_available(s);
    ThomFlavor thom = ThomFlavor::U;
    if (s.level == 0) thom = ThomFlavor::None;
    if (s.sign == Sign::Plus) thom = ThomFlavor::UPlus;
    if (s.sign == Sign::Minus) thom = ThomFlavor::UMinus;

    std::vector<ContentPiece> out;
    auto add = [&](bool euler, Flavor f) {
        if (euler && !e_ok) return;
        out.push_back(ContentPiece{euler, f, thom});
    };

    if (s.level == 0) {
        add(false, Flavor::Full);
        add(true, Flavor::Full);
    } else if (s.level == 1) {
        if (s.a == s.b) {
            add(false, Flavor::Skew);
            add(true, Flavor::Sym);
        } else {
            add(false, Flavor::Full);
            add(true, Flavor::Full);
        }
    } else if (s.level % 2 == 0) {
        int r = s.level / 2;
        Flavor f = Flavor::Full;
        if (s.a == s.b) f = r % 2 == 0 ? Flavor::Sym : Flavor::Skew;
        add(false, f);
        add(true, f);
    } else {
        int r = (s.level - 1) / 2;
        add(r % 2 == 1, Flavor::Full);
    }
    return out;
}

Series stratum_series(const Stratum& s, int max_degree) {
    Series total(max_degree);
    for (const auto& piece : column_content(s)) {
        int shift = s.thom_degree() + (piece.euler ? s.euler_degree() : 0);
        if (shift > max_degree) continue;
        FlavoredSpace space{s.vars(), piece.flavor};
        total += space_series(space, max_degree).shifted(shift);
    }
    return total;
}

}  // namespace morin
