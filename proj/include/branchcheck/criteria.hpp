#pragma once

#include <optional>
#include <string>
#include <vector>

#include "branchcheck/merle.hpp"
#include "branchcheck/newton.hpp"
#include "branchcheck/polynomial.hpp"
#include "branchcheck/resultant.hpp"

namespace branchcheck {

struct PreconditionCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Newton diagram of Discr_y(f(u, y) - v), valid when every hypothesis that
// identifies it with the jacobian Newton diagram of (x, f) holds: positive
// y-degree with constant leading coefficient, f(0, y) nonzero with simple
// nonzero roots, and f without repeated factors.
struct JacobianDiagramResult {
    bool ok = false;
    std::string failure;  // name of the first failed check
    CanonicalDiagram diagram;
    Polynomial discriminant;  // D(u, v) when ok
    std::vector<PreconditionCheck> checks;
};

JacobianDiagramResult jacobian_newton_diagram(const Polynomial& f);

enum class Verdict { Irreducible, Reducible, Smooth, NotApplicable };

std::string to_string(Verdict verdict);

struct IrreducibilityReport {
    Verdict verdict = Verdict::NotApplicable;
    std::string reason;  // set for NotApplicable
    std::optional<std::vector<Integer>> semigroup;
    std::optional<CanonicalDiagram> diagram;
    std::optional<MerleVerdict> merle;
    std::vector<PreconditionCheck> preconditions;
    std::optional<Polynomial> discriminant;
    std::optional<Rational> point;  // y0 for the at-point and at-infinity pipelines
    std::optional<LatticePolygon> infinity_polygon;     // P_inf of the fiber discriminant
    std::optional<LatticePolygon> transformed_polygon;  // its at-zero image
};

// Local test at the origin. Smooth curves short-circuit; otherwise the
// diagram of the discriminant surface is tested for Merle type, which by the
// discriminant criterion decides analytic irreducibility and, when
// irreducible, yields the semigroup generators.
IrreducibilityReport irreducible_at_origin(const Polynomial& f);

// Local test at (0, y0) for a curve meeting x = 0 only there, i.e.
// f(0, y) = c (y - y0)^N. When y0 is not supplied it is derived from the
// coefficients and verified. Reduces to the origin case by y -> y + y0.
IrreducibilityReport irreducible_at_point(const Polynomial& f,
                                          std::optional<Rational> y0 = std::nullopt);

// Test at the single point at infinity Q = (1 : y0 : 0) of a squarefree
// curve whose leading form is c (y - y0 x)^n: the Newton polygon at infinity
// of Discr_y(p - t) is carried to an at-zero polygon by
// (i, k) -> (n(n-1) - i - nk, k) and tested for Merle type.
IrreducibilityReport irreducible_at_infinity(const Polynomial& p);

struct AbhyankarMohReport {
    bool applicable = false;
    std::string reason;  // set when not applicable
    Inclination max_inclination;  // q, the largest inclination of the transformed diagram
    long long degree = 0;         // n
    bool holds = false;           // q < n
    std::vector<PreconditionCheck> preconditions;
};

// The Abhyankar-Moh inequality q < n for a curve with one point at infinity.
AbhyankarMohReport abhyankar_moh_check(const Polynomial& p);

}  // namespace branchcheck
