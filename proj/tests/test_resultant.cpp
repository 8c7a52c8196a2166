#include <doctest.h>

#include <random>

#include "branchcheck/resultant.hpp"
#include "test_util.hpp"

using namespace branchcheck;
using namespace branchcheck::testutil;

namespace {

// Test-side oracle, independent of the library's determinant implementations:
// plain recursive Laplace expansion along the first column.
Polynomial laplace_first_column(const PolyMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 1) return m.at(0, 0);
    Polynomial det;
    for (std::size_t row = 0; row < n; ++row) {
        if (m.at(row, 0).is_zero()) continue;
        PolyMatrix minor(n - 1);
        std::size_t out_row = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row) continue;
            for (std::size_t c = 1; c < n; ++c) minor.at(out_row, c - 1) = m.at(r, c);
            ++out_row;
        }
        Polynomial term = m.at(row, 0) * laplace_first_column(minor);
        if (row % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

PolyMatrix random_matrix(std::mt19937& rng, std::size_t dim) {
    std::uniform_int_distribution<int> coin(0, 3);
    PolyMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            if (coin(rng) != 0)  // keep the matrix sparse
                m.at(r, c) = random_polynomial(rng, {Var::x, Var::y}, 2, 2, false);
    return m;
}

}  // namespace

TEST_CASE("sylvester matrix has the classical layout") {
    PolyMatrix s = sylvester_matrix(P("y^2-u"), P("y-v"), Var::y);
    REQUIRE(s.dim() == 3);
    CHECK(s.at(0, 0) == Polynomial(1));
    CHECK(s.at(0, 1) == Polynomial());
    CHECK(s.at(0, 2) == P("-u"));
    CHECK(s.at(1, 0) == Polynomial(1));
    CHECK(s.at(1, 1) == P("-v"));
    CHECK(s.at(1, 2) == Polynomial());
    CHECK(s.at(2, 0) == Polynomial());
    CHECK(s.at(2, 1) == Polynomial(1));
    CHECK(s.at(2, 2) == P("-v"));
}

TEST_CASE("sylvester dimension is the degree sum") {
    Polynomial a = P("y^4+x*y+1");
    Polynomial b = P("y^3-x");
    CHECK(sylvester_matrix(a, b, Var::y).dim() == 7);
    CHECK_THROWS_AS(sylvester_matrix(P("x"), P("x+1"), Var::y), std::domain_error);
}

TEST_CASE("3x3 sylvester determinant, expanded by hand") {
    PolyMatrix s = sylvester_matrix(P("y^2-x^3-v"), P("2*y"), Var::y);
    REQUIRE(s.dim() == 3);
    CHECK(determinant(s) == P("-4*x^3-4*v"));
}

TEST_CASE("determinant basics") {
    PolyMatrix identity(3);
    for (std::size_t k = 0; k < 3; ++k) identity.at(k, k) = Polynomial(1);
    CHECK(determinant(identity) == Polynomial(1));

    PolyMatrix repeated(3);
    for (std::size_t c = 0; c < 3; ++c) {
        repeated.at(0, c) = P("x+1");
        repeated.at(1, c) = P("x+1");
        repeated.at(2, c) = Polynomial(static_cast<int>(c));
    }
    CHECK(determinant_bareiss(repeated) == Polynomial());
    CHECK(determinant_cofactor(repeated) == Polynomial());

    PolyMatrix swap2(2);
    swap2.at(0, 1) = Polynomial(1);
    swap2.at(1, 0) = Polynomial(1);
    CHECK(determinant_bareiss(swap2) == Polynomial(-1));
}

TEST_CASE("Bareiss agrees with the cofactor oracle") {
    std::mt19937 rng(31);
    for (int round = 0; round < 30; ++round) {
        std::uniform_int_distribution<std::size_t> dims(1, 6);
        PolyMatrix m = random_matrix(rng, dims(rng));
        Polynomial reference = laplace_first_column(m);
        CHECK(determinant_bareiss(m) == reference);
        CHECK(determinant_cofactor(m) == reference);
    }
}

TEST_CASE("resultants of the worked examples") {
    CHECK(resultant_in(P("y^2-u"), P("y-v"), Var::y) == P("v^2-u"));
    CHECK(resultant_in(P("y^2-x"), P("y^2-x"), Var::y) == Polynomial());
    CHECK(resultant_in(P("y^3+u*y+v"), P("3*y^2+u"), Var::y) == P("4*u^3+27*v^2"));
    CHECK(resultant_in(P("y^2-u"), Polynomial(5), Var::y) == Polynomial(25));
    CHECK_THROWS_AS(resultant_in(Polynomial(), P("y"), Var::y), std::domain_error);
}

TEST_CASE("resultant is multiplicative in the first argument") {
    std::mt19937 rng(37);
    auto random_monic = [&](int degree) {
        Polynomial p = Polynomial::variable(Var::y, static_cast<unsigned>(degree));
        for (int k = 0; k < degree; ++k) {
            std::uniform_int_distribution<int> c(-4, 4);
            p += Q(c(rng)) * Polynomial::variable(Var::y, static_cast<unsigned>(k)) *
                 Polynomial::variable(Var::x, 1);
            p += Q(c(rng)) * Polynomial::variable(Var::y, static_cast<unsigned>(k));
        }
        return p;
    };
    std::uniform_int_distribution<int> degree(1, 3);
    for (int round = 0; round < 15; ++round) {
        Polynomial a = random_monic(degree(rng));
        Polynomial b = random_monic(degree(rng));
        Polynomial c = random_monic(degree(rng));
        CHECK(resultant_in(a * b, c, Var::y) ==
              resultant_in(a, c, Var::y) * resultant_in(b, c, Var::y));
    }
}

TEST_CASE("resultant vanishes exactly on a common factor") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> c(1, 9);
    for (int round = 0; round < 15; ++round) {
        int c1 = c(rng);
        int c2 = c(rng);
        if (c1 == c2) c2 += 1;
        Polynomial g = P("y^2") + Polynomial(c1);
        Polynomial h = P("y^2") + Polynomial(c2);
        Polynomial k = P("y") + Q(c(rng)) * P("x");
        CHECK(resultant_in(g * k, h * k, Var::y) == Polynomial());
        CHECK(resultant_in(g, h, Var::y) != Polynomial());
    }
}

TEST_CASE("discriminants of the worked examples") {
    CHECK(discriminant_in(P("y^2+u"), Var::y) == P("-4*u"));
    CHECK(discriminant_in(P("y-u"), Var::y) == Polynomial(1));
    CHECK(discriminant_in(P("y^3+u*y+v"), Var::y) == P("-4*u^3-27*v^2"));
    CHECK_THROWS_AS(discriminant_in(P("x*y^2+y"), Var::y), std::domain_error);
    CHECK_THROWS_AS(discriminant_in(P("x"), Var::y), std::domain_error);
}

TEST_CASE("discriminant surface golden values") {
    // computed independently with a computer algebra system
    Polynomial golden =
        P("-256*v^3+256*u^6*v^2+288*u^13*v-256*u^19-27*u^20");
    CHECK(discriminant_surface(P("(y^2-x^3)^2-x^5*y")) == golden);

    CHECK(discriminant_surface(P("y^2-x^3")) == P("4*v+4*u^3"));
    CHECK(discriminant_surface(P("y^2-x^5")) == P("4*v+4*u^5"));

    Polynomial two_branch = discriminant_surface(P("(y^2-x^3)^2-x^7"));
    CHECK(equal_up_to_scalar(two_branch, P("(v-u^6+u^7)*(v+u^7)^2")));
}

TEST_CASE("discriminant fiber golden values") {
    CHECK(discriminant_fiber(P("y^2-x")) == P("4*x+4*t"));
    CHECK(discriminant_fiber(P("y")) == Polynomial(1));
    CHECK(equal_up_to_scalar(discriminant_fiber(P("x+(x+y^3)^3")),
                             P("(x+x^3-t)^2*(x-t)^6")));
}

TEST_CASE("discriminant surface always carries v^(N-1) with a constant coefficient") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> degree(1, 5);
    for (int round = 0; round < 20; ++round) {
        unsigned n = static_cast<unsigned>(degree(rng));
        Polynomial f = Polynomial::variable(Var::y, n);
        if (n > 1) f += random_polynomial(rng, {Var::x, Var::y}, 3, static_cast<int>(n - 1));
        Polynomial d = discriminant_surface(f);
        REQUIRE(!d.is_zero());
        if (n == 1) continue;  // Discr of a linear polynomial is the constant 1
        Polynomial top = d.coefficient_in(Var::v, n - 1);
        CHECK(top.is_constant());
        CHECK(!top.is_zero());
    }
}
