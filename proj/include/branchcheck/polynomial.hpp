#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "branchcheck/rational.hpp"
#include "branchcheck/variables.hpp"

namespace branchcheck {

// Exponent vector over the fixed variable universe {x, y, u, v, t}.
struct Monomial {
    std::array<unsigned, kVarCount> exp{};

    static Monomial variable(Var var, unsigned e = 1) {
        Monomial m;
        m.exp[index_of(var)] = e;
        return m;
    }

    unsigned exponent(Var var) const { return exp[index_of(var)]; }
    unsigned& exponent(Var var) { return exp[index_of(var)]; }

    long long degree() const {
        long long d = 0;
        for (unsigned e : exp) d += e;
        return d;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t k = 0; k < kVarCount; ++k)
            if (exp[k] > m.exp[k]) return false;
        return true;
    }

    Monomial times(const Monomial& m) const {
        Monomial r;
        for (std::size_t k = 0; k < kVarCount; ++k) r.exp[k] = exp[k] + m.exp[k];
        return r;
    }

    // Requires divides(m) on the caller's side.
    Monomial divided_into(const Monomial& m) const {
        Monomial r;
        for (std::size_t k = 0; k < kVarCount; ++k) r.exp[k] = m.exp[k] - exp[k];
        return r;
    }

    bool operator==(const Monomial&) const = default;
};

// Graded-lexicographic order with larger terms first, so that map iteration
// starts at the leading term and printing is deterministic.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long long da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exp > b.exp;
    }
};

enum class FormMode { Lowest, Highest };

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored coefficient is zero.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

    Polynomial() = default;
    Polynomial(int value) : Polynomial(Rational(value)) {}
    explicit Polynomial(const Rational& value);

    static Polynomial variable(Var var, unsigned e = 1);
    static Polynomial term(const Monomial& m, const Rational& coefficient);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Zero for the zero polynomial.
    Rational constant_term() const;
    std::size_t term_count() const { return terms_.size(); }

    bool uses(Var var) const;
    bool uses_only(VarSet allowed) const;

    // Maximal exponent of var; throws std::domain_error on the zero polynomial.
    long long degree_in(Var var) const;
    // Maximal total degree of a term; throws on zero.
    long long total_degree() const;
    // Minimal total degree of a term (the order at the origin); throws on zero.
    long long ord_at_origin() const;

    // Coefficient of var^k, a polynomial in the remaining variables.
    Polynomial coefficient_in(Var var, unsigned k) const;
    Polynomial leading_coefficient_in(Var var) const;

    // Homogeneous part of minimal/maximal total degree; throws on zero.
    Polynomial leading_form(FormMode mode) const;

    Polynomial derivative(Var var) const;
    // var -> var + c, fully expanded.
    Polynomial shift(Var var, const Rational& c) const;
    // Every exponent of var multiplied by n; requires n >= 1.
    Polynomial substitute_power(Var var, unsigned n) const;
    // Drop all terms with a positive exponent of var.
    Polynomial evaluate_at_zero(Var var) const;
    // Relabel the exponents of `from` as exponents of `to`; `to` must be unused.
    Polynomial rename(Var from, Var to) const;

    Polynomial pow(unsigned e) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

    bool operator==(const Polynomial&) const = default;

    // Canonical graded-lex rendering, re-parseable by parse_polynomial.
    std::string to_string() const;

  private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Quotient a/b when b divides a exactly; throws std::domain_error on a zero
// divisor and std::logic_error when the division is not exact.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

// Monic gcd of two polynomials univariate in var (Euclidean remainder
// sequence over the rationals). gcd(0, 0) is 0 by convention.
Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, Var var);

}  // namespace branchcheck
