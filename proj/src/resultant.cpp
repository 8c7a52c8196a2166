#include "branchcheck/resultant.hpp"

#include <stdexcept>
#include <utility>

namespace branchcheck {

PolyMatrix sylvester_matrix(const Polynomial& a, const Polynomial& b, Var var) {
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("sylvester_matrix: zero polynomial");
    const std::size_t m = static_cast<std::size_t>(a.degree_in(var));
    const std::size_t k = static_cast<std::size_t>(b.degree_in(var));
    if (m == 0 && k == 0)
        throw std::domain_error("sylvester_matrix: both polynomials are constant in the variable");
    PolyMatrix s(m + k);
    for (std::size_t row = 0; row < k; ++row)
        for (std::size_t j = 0; j <= m; ++j)
            s.at(row, row + j) = a.coefficient_in(var, static_cast<unsigned>(m - j));
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t j = 0; j <= k; ++j)
            s.at(k + row, row + j) = b.coefficient_in(var, static_cast<unsigned>(k - j));
    return s;
}

Polynomial determinant_cofactor(const PolyMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return Polynomial(1);
    if (n == 1) return m.at(0, 0);
    Polynomial det;
    for (std::size_t col = 0; col < n; ++col) {
        if (m.at(0, col).is_zero()) continue;
        PolyMatrix minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t out = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == col) continue;
                minor.at(r - 1, out++) = m.at(r, c);
            }
        }
        Polynomial cofactor = m.at(0, col) * determinant_cofactor(minor);
        if (col % 2 == 0)
            det += cofactor;
        else
            det -= cofactor;
    }
    return det;
}

Polynomial determinant_bareiss(PolyMatrix m) {
    const std::size_t n = m.dim();
    if (n == 0) return Polynomial(1);
    int sign = 1;
    Polynomial previous_pivot(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial();
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = exact_quotient(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j),
                                            previous_pivot);
        previous_pivot = m.at(k, k);
    }
    return sign < 0 ? -m.at(n - 1, n - 1) : m.at(n - 1, n - 1);
}

Polynomial determinant(const PolyMatrix& m) {
    return m.dim() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

Polynomial resultant_in(const Polynomial& a, const Polynomial& b, Var var) {
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("resultant of a zero polynomial");
    const long long m = a.degree_in(var);
    const long long k = b.degree_in(var);
    if (k == 0) return b.pow(static_cast<unsigned>(m));
    if (m == 0) return a.pow(static_cast<unsigned>(k));
    return determinant(sylvester_matrix(a, b, var));
}

Polynomial discriminant_in(const Polynomial& a, Var var) {
    if (a.is_zero()) throw std::domain_error("discriminant of the zero polynomial");
    const long long n = a.degree_in(var);
    if (n < 1) throw std::domain_error("discriminant requires positive degree");
    Polynomial lead = a.leading_coefficient_in(var);
    if (!lead.is_constant())
        throw std::domain_error("discriminant: leading coefficient is not constant");
    if (n == 1) return Polynomial(1);
    Polynomial res = resultant_in(a, a.derivative(var), var);
    Rational scale = Rational(1) / lead.constant_term();
    if ((n * (n - 1) / 2) % 2 != 0) scale = -scale;
    return scale * res;
}

namespace {

Polynomial fibered_discriminant(const Polynomial& f, Var base_from, Var base_to, Var fiber) {
    if (!f.uses_only(VarSet{Var::x, Var::y}))
        throw std::invalid_argument("discriminant surface: input must be a polynomial in x, y");
    Polynomial shifted = f.rename(base_from, base_to) - Polynomial::variable(fiber);
    return discriminant_in(shifted, Var::y);
}

}  // namespace

Polynomial discriminant_surface(const Polynomial& f) {
    return fibered_discriminant(f, Var::x, Var::u, Var::v);
}

Polynomial discriminant_fiber(const Polynomial& p) {
    return fibered_discriminant(p, Var::x, Var::x, Var::t);
}

}  // namespace branchcheck
