#pragma once

#include <cstddef>
#include <vector>

#include "branchcheck/polynomial.hpp"

namespace branchcheck {

// Square matrix of polynomials, row-major.
class PolyMatrix {
  public:
    explicit PolyMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    Polynomial& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Polynomial& at(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

  private:
    std::size_t dim_;
    std::vector<Polynomial> entries_;
};

// Standard Sylvester layout: deg_var(b) rows of a's coefficients followed by
// deg_var(a) rows of b's, each row in descending powers of var. Throws when
// both degrees are zero.
PolyMatrix sylvester_matrix(const Polynomial& a, const Polynomial& b, Var var);

// Laplace expansion along the first row. Slow; the reference path.
Polynomial determinant_cofactor(const PolyMatrix& m);

// Fraction-free Bareiss elimination; every division is exact.
Polynomial determinant_bareiss(PolyMatrix m);

// Bareiss for dim > 4, cofactor expansion otherwise.
Polynomial determinant(const PolyMatrix& m);

// Res_var(a, b); constants of var-degree zero follow the convention
// Res(a, b) = b^deg(a) (and symmetrically). Throws when a or b is zero.
Polynomial resultant_in(const Polynomial& a, const Polynomial& b, Var var);

// Discr_var(a) = (-1)^(N(N-1)/2) Res_var(a, a') / lc with N = deg_var(a) >= 1;
// returns 1 for N = 1. The leading coefficient of a in var must be a nonzero
// constant; otherwise throws std::domain_error.
Polynomial discriminant_in(const Polynomial& a, Var var);

// D(u, v) = Discr_y(f(u, y) - v) for f in (x, y); x is renamed to u and v is
// fresh. Preconditions as in discriminant_in.
Polynomial discriminant_surface(const Polynomial& f);

// D(x, t) = Discr_y(p(x, y) - t) for p in (x, y); t is fresh.
Polynomial discriminant_fiber(const Polynomial& p);

}  // namespace branchcheck
