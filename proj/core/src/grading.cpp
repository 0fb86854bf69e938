#include "morin/grading.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace morin {

VariableSet::VariableSet(int a_, int b_) : a(a_), b(b_) {
    if (a < 0 || b < 0) throw std::invalid_argument("VariableSet: negative index");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> unprimed, std::vector<int> primed)
    : up_(std::move(unprimed)), pr_(std::move(primed)) {
    for (int e : up_)
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    for (int e : pr_)
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    trim();
}

void Monomial::trim() {
    while (!up_.empty() && up_.back() == 0) up_.pop_back();
    while (!pr_.empty() && pr_.back() == 0) pr_.pop_back();
}

Monomial Monomial::p(int i, int power) {
    if (i < 1) throw std::invalid_argument("Monomial::p: index must be >= 1");
    std::vector<int> v(static_cast<std::size_t>(i), 0);
    v.back() = power;
    return Monomial(std::move(v), {});
}

Monomial Monomial::pprime(int j, int power) {
    if (j < 1) throw std::invalid_argument("Monomial::pprime: index must be >= 1");
    std::vector<int> v(static_cast<std::size_t>(j), 0);
    v.back() = power;
    return Monomial({}, std::move(v));
}

int Monomial::degree() const {
    int d = 0;
    for (std::size_t i = 0; i < up_.size(); ++i) d += 4 * static_cast<int>(i + 1) * up_[i];
    for (std::size_t j = 0; j < pr_.size(); ++j) d += 4 * static_cast<int>(j + 1) * pr_[j];
    return d;
}

int Monomial::exponent(int i) const {
    return (i >= 1 && static_cast<std::size_t>(i) <= up_.size()) ? up_[i - 1] : 0;
}

int Monomial::exponent_prime(int j) const {
    return (j >= 1 && static_cast<std::size_t>(j) <= pr_.size()) ? pr_[j - 1] : 0;
}

bool Monomial::lives_in(const VariableSet& vars) const {
    return static_cast<int>(up_.size()) <= vars.unprimed_count() &&
           static_cast<int>(pr_.size()) <= vars.primed_count();
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<int> u(std::max(up_.size(), o.up_.size()), 0);
    std::vector<int> v(std::max(pr_.size(), o.pr_.size()), 0);
    for (std::size_t i = 0; i < up_.size(); ++i) u[i] += up_[i];
    for (std::size_t i = 0; i < o.up_.size(); ++i) u[i] += o.up_[i];
    for (std::size_t i = 0; i < pr_.size(); ++i) v[i] += pr_[i];
    for (std::size_t i = 0; i < o.pr_.size(); ++i) v[i] += o.pr_[i];
    return Monomial(std::move(u), std::move(v));
}

namespace {

// -1, 0, 1 comparing zero-padded exponent vectors lexicographically.
int lex_compare(const std::vector<int>& x, const std::vector<int>& y) {
    std::size_t n = std::max(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        int xi = i < x.size() ? x[i] : 0;
        int yi = i < y.size() ? y[i] : 0;
        if (xi != yi) return xi < yi ? -1 : 1;
    }
    return 0;
}

}  // namespace

bool Monomial::operator<(const Monomial& o) const {
    int d1 = degree(), d2 = o.degree();
    if (d1 != d2) return d1 < d2;
    int c = lex_compare(up_, o.up_);
    if (c != 0) return c > 0;
    return lex_compare(pr_, o.pr_) > 0;
}

std::string Monomial::to_string() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::vector<int>& v, const char* name) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            if (!first) os << '*';
            first = false;
            os << name << (i + 1);
            if (v[i] > 1) os << '^' << v[i];
        }
    };
    emit(up_, "p");
    emit(pr_, "p'");
    return os.str();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(VariableSet vars, const Monomial& m, const Rational& c) : vars_(vars) {
    add_term(m, c);
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(vars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(vars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::with_vars(const VariableSet& v) const {
    Polynomial r = *this;
    r.vars_ = v;
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (a != 1) {
            os << a.get_str();
            if (!m.is_one()) os << '*';
            else continue;
        }
        os << m.to_string();
    }
    return os.str();
}

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::Full: return "FULL";
        case Flavor::Sym: return "SYM";
        case Flavor::Skew: return "SKEW";
    }
    return "?";
}

// ------------------------------------------------------------------ Series

Series::Series(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("Series: negative truncation");
    c_.assign(static_cast<std::size_t>(max_degree) + 1, 0);
}

Series::Series(int max_degree, std::vector<std::int64_t> coeffs) : Series(max_degree) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
}

Series Series::one(int max_degree) { return monomial(max_degree, 0); }

Series Series::monomial(int max_degree, int k, std::int64_t c) {
    Series s(max_degree);
    if (k >= 0 && k <= max_degree) s.c_[static_cast<std::size_t>(k)] = c;
    return s;
}

Series Series::geometric(int max_degree, int n) {
    if (n <= 0) throw std::invalid_argument("Series::geometric: degree must be positive");
    Series s(max_degree);
    for (int k = 0; k <= max_degree; k += n) s.c_[static_cast<std::size_t>(k)] = 1;
    return s;
}

Series Series::binomial(int max_degree, int n) {
    Series s = one(max_degree);
    if (n <= max_degree) s.c_[static_cast<std::size_t>(n)] += 1;
    return s;
}

std::int64_t Series::operator[](int n) const {
    if (n < 0 || n > max_degree()) return 0;
    return c_[static_cast<std::size_t>(n)];
}

static void require_same_truncation(const Series& x, const Series& y) {
    if (x.max_degree() != y.max_degree())
        throw std::invalid_argument("Series: truncation mismatch");
}

Series& Series::operator+=(const Series& o) {
    require_same_truncation(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    require_same_truncation(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Series Series::operator+(const Series& o) const {
    Series r = *this;
    r += o;
    return r;
}

Series Series::operator-(const Series& o) const {
    Series r = *this;
    r -= o;
    return r;
}

Series Series::operator*(const Series& o) const {
    require_same_truncation(*this, o);
    Series r(max_degree());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

Series Series::shifted(int k) const {
    Series r(max_degree());
    for (int i = 0; i <= max_degree(); ++i) {
        int j = i + k;
        if (j >= 0 && j <= max_degree()) r.c_[static_cast<std::size_t>(j)] = c_[static_cast<std::size_t>(i)];
    }
    return r;
}

Series Series::truncated(int max_degree) const {
    Series r(max_degree);
    for (int i = 0; i <= max_degree && i <= this->max_degree(); ++i)
        r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)];
    return r;
}

bool Series::nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x >= 0; });
}

std::string Series::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    return os.str();
}

// ------------------------------------------------------------- enumeration

std::vector<Monomial> enumerate_monomials(const VariableSet& vars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0 || degree % 4 != 0) return out;
    const int u = vars.unprimed_count();
    const int v = vars.primed_count();
    const int total = degree / 4;

    // Variables in order p_1..p_u, p'_1..p'_v; weight of slot i is its index.
    std::vector<int> weight;
    for (int i = 1; i <= u; ++i) weight.push_back(i);
    for (int j = 1; j <= v; ++j) weight.push_back(j);
    std::vector<int> exps(weight.size(), 0);

    std::function<void(std::size_t, int)> rec = [&](std::size_t slot, int left) {
        if (slot == weight.size()) {
            if (left == 0) {
                std::vector<int> up(exps.begin(), exps.begin() + u);
                std::vector<int> pr(exps.begin() + u, exps.end());
                out.emplace_back(std::move(up), std::move(pr));
            }
            return;
        }
        for (int e = left / weight[slot]; e >= 0; --e) {
            exps[slot] = e;
            rec(slot + 1, left - e * weight[slot]);
        }
        exps[slot] = 0;
    };
    rec(0, total);
    std::sort(out.begin(), out.end());
    return out;
}

Series space_series(const FlavoredSpace& space, int max_degree) {
    const VariableSet& vars = space.vars;
    if (space.flavor == Flavor::Full) {
        Series s = Series::one(max_degree);
        for (int i = 1; i <= vars.unprimed_count(); ++i) s = s * Series::geometric(max_degree, 4 * i);
        for (int j = 1; j <= vars.primed_count(); ++j) s = s * Series::geometric(max_degree, 4 * j);
        return s;
    }
    if (!vars.square())
        throw std::invalid_argument("space_series: SYM/SKEW need a square variable set");
    Series s(max_degree);
    for (int n = 0; n <= max_degree; n += 4) {
        std::int64_t fixed = 0, moved = 0;
        for (const auto& m : enumerate_monomials(vars, n)) {
            if (m == m.swapped()) ++fixed;
            else ++moved;
        }
        s.at(n) = moved / 2 + (space.flavor == Flavor::Sym ? fixed : 0);
    }
    return s;
}

Series full_series(int a, int b, int max_degree) {
    return space_series(FlavoredSpace::full(a, b), max_degree);
}

Series sym_series(int a, int max_degree) {
    return space_series(FlavoredSpace::sym(a, a), max_degree);
}

Series skew_series(int a, int max_degree) {
    return space_series(FlavoredSpace::skew(a, a), max_degree);
}

Series bso_series(int d, int max_degree) {
    return space_series(FlavoredSpace::single(d), max_degree);
}

// --------------------------------------------------------- swap and friends

Polynomial swap(const Polynomial& p) {
    if (!p.vars().square()) throw std::invalid_argument("swap: variable set is not square");
    Polynomial r(p.vars());
    for (const auto& [m, c] : p.terms()) r.add_term(m.swapped(), c);
    return r;
}

std::pair<Polynomial, Polynomial> sym_skew_split(const Polynomial& p) {
    Polynomial s = swap(p);
    Rational half(1, 2);
    return {(p + s) * half, (p - s) * half};
}

Polynomial s_hom(const Monomial& m, const VariableSet& target) {
    Polynomial result(target, Monomial());
    const int u = target.unprimed_count();
    const int v = target.primed_count();
    for (int i = 1; i <= static_cast<int>(m.unprimed().size()); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        Polynomial image(target);
        for (int j = 0; j <= i; ++j) {
            int k = i - j;
            if (j > u || k > v) continue;
            Monomial x = (j ? Monomial::p(j) : Monomial()) * (k ? Monomial::pprime(k) : Monomial());
            image.add_term(x, 1);
        }
        for (int t = 0; t < e; ++t) result = result * image;
        if (result.is_zero()) break;
    }
    return result;
}

Polynomial s_hom(const Polynomial& p, const VariableSet& target) {
    Polynomial r(target);
    for (const auto& [m, c] : p.terms()) r += s_hom(m, target) * c;
    return r;
}

Polynomial restrict(const Polynomial& p, const VariableSet& to) {
    Polynomial r(to);
    for (const auto& [m, c] : p.terms())
        if (m.lives_in(to)) r.add_term(m, c);
    return r;
}

}  // namespace morin
