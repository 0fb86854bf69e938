#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace morin {

using Rational = mpq_class;

// Variables p_1..p_{a/2} (unprimed) and p'_1..p'_{b/2} (primed), p_i of degree 4i.
struct VariableSet {
    int a = 0;
    int b = 0;

    VariableSet() = default;
    VariableSet(int a_, int b_);

    int unprimed_count() const { return a / 2; }
    int primed_count() const { return b / 2; }
    bool square() const { return unprimed_count() == primed_count(); }

    // Ring in p_1..p_{d/2} only.
    static VariableSet single(int d) { return VariableSet(d, 0); }

    bool operator==(const VariableSet&) const = default;
};

// Exponent vectors with trailing zeros trimmed, so equal monomials compare
// equal regardless of the ambient variable set.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<int> unprimed, std::vector<int> primed);

    static Monomial p(int i, int power = 1);
    static Monomial pprime(int j, int power = 1);

    int degree() const;
    int exponent(int i) const;        // exponent of p_i
    int exponent_prime(int j) const;  // exponent of p'_j
    const std::vector<int>& unprimed() const { return up_; }
    const std::vector<int>& primed() const { return pr_; }
    bool is_one() const { return up_.empty() && pr_.empty(); }

    // True when every variable occurring here exists in vars.
    bool lives_in(const VariableSet& vars) const;

    Monomial swapped() const { return Monomial(pr_, up_); }
    Monomial operator*(const Monomial& o) const;

    std::string to_string() const;

    bool operator==(const Monomial& o) const { return up_ == o.up_ && pr_ == o.pr_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    // Degree first; within a degree, larger exponents of earlier variables
    // come first (p_1^2 < p_1 p'_1 < p'_1^2).
    bool operator<(const Monomial& o) const;

private:
    void trim();
    std::vector<int> up_;
    std::vector<int> pr_;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(VariableSet vars) : vars_(vars) {}
    Polynomial(VariableSet vars, const Monomial& m, const Rational& c = 1);

    const VariableSet& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator-() const { return *this * Rational(-1); }

    // Same terms, relabelled ambient.
    Polynomial with_vars(const VariableSet& v) const;

    std::string to_string() const;

    // Equality of term maps; ambient is not compared.
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

private:
    VariableSet vars_;
    Terms terms_;
};

enum class Flavor { Full, Sym, Skew };

std::string flavor_name(Flavor f);

struct FlavoredSpace {
    VariableSet vars;
    Flavor flavor = Flavor::Full;

    static FlavoredSpace full(int a, int b) { return {VariableSet(a, b), Flavor::Full}; }
    static FlavoredSpace sym(int a, int b) { return {VariableSet(a, b), Flavor::Sym}; }
    static FlavoredSpace skew(int a, int b) { return {VariableSet(a, b), Flavor::Skew}; }
    static FlavoredSpace single(int d) { return {VariableSet::single(d), Flavor::Full}; }
};

// Truncated power series with integer coefficients c_0..c_D.
class Series {
public:
    explicit Series(int max_degree = 0);
    Series(int max_degree, std::vector<std::int64_t> coeffs);

    static Series one(int max_degree);
    static Series monomial(int max_degree, int k, std::int64_t c = 1);
    // (1 - t^n)^{-1}
    static Series geometric(int max_degree, int n);
    // 1 + t^n
    static Series binomial(int max_degree, int n);

    int max_degree() const { return static_cast<int>(c_.size()) - 1; }
    std::int64_t operator[](int n) const;
    std::int64_t& at(int n) { return c_.at(static_cast<std::size_t>(n)); }
    const std::vector<std::int64_t>& coefficients() const { return c_; }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series shifted(int k) const;
    Series truncated(int max_degree) const;

    bool nonnegative() const;
    std::string to_string() const;  // "c_0,c_1,...,c_D"

    bool operator==(const Series& o) const { return c_ == o.c_; }

private:
    std::vector<std::int64_t> c_;
};

// All monomials of the given degree, ascending in Monomial order.
std::vector<Monomial> enumerate_monomials(const VariableSet& vars, int degree);

// Rank series of FULL, SYM or SKEW parts. SYM/SKEW need a square variable set.
Series space_series(const FlavoredSpace& space, int max_degree);

// Shorthands for the rank series used throughout.
Series full_series(int a, int b, int max_degree);  // rank of P(a,b)
Series sym_series(int a, int max_degree);          // symmetric part of P(a,a)
Series skew_series(int a, int max_degree);         // skew part of P(a,a)
Series bso_series(int d, int max_degree);          // rank of P(d)

Polynomial swap(const Polynomial& p);
std::pair<Polynomial, Polynomial> sym_skew_split(const Polynomial& p);

// Multiplicative map p_i -> sum_j p_j p'_{i-j}, variables outside target set to 0.
Polynomial s_hom(const Monomial& m, const VariableSet& target);
Polynomial s_hom(const Polynomial& p, const VariableSet& target);

// Drops monomials that use a variable missing from `to`.
Polynomial restrict(const Polynomial& p, const VariableSet& to);

}  // namespace morin
