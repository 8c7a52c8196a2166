#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "branchcheck/polynomial.hpp"

namespace branchcheck {

struct LatticePoint {
    long long i = 0;
    long long j = 0;

    bool operator==(const LatticePoint&) const = default;
};

enum class PolygonKind { AtZero, AtInfinity };

// Vertex chain of a Newton polygon. At zero: the compact boundary of
// Conv(supp + R^2_+), i strictly increasing and j strictly decreasing. At
// infinity: the chain of hull edges of supp united with the origin that face
// away from the origin, listed from the vertical-axis end down.
struct LatticePolygon {
    PolygonKind kind = PolygonKind::AtZero;
    std::vector<LatticePoint> vertices;

    bool operator==(const LatticePolygon&) const = default;
};

// One side length of an elementary diagram: a positive integer or infinity.
class Extent {
  public:
    static Extent finite(long long n);
    static Extent infinite();

    bool is_infinite() const { return infinite_; }
    long long value() const;

    friend Extent operator+(const Extent& a, const Extent& b) {
        if (a.infinite_ || b.infinite_) return infinite();
        return finite(a.n_ + b.n_);
    }

    bool operator==(const Extent&) const = default;

  private:
    long long n_ = 0;
    bool infinite_ = false;
};

// The diagram of x^width + y^height (one power alone when the other side is
// infinite). Inclination width/height with width/inf = 0 and inf/height = inf.
struct ElementaryDiagram {
    Extent width;
    Extent height;

    ElementaryDiagram(Extent w, Extent h);

    bool operator==(const ElementaryDiagram&) const = default;
};

// -1, 0, 1 as the inclination of a is smaller, equal, larger than b's.
int compare_inclination(const ElementaryDiagram& a, const ElementaryDiagram& b);

struct Inclination {
    bool infinite = false;
    Rational value;  // meaningful when finite

    bool operator==(const Inclination&) const = default;
};

Inclination inclination_of(const ElementaryDiagram& piece);

// Minkowski decomposition of a Newton diagram into elementary diagrams with
// strictly increasing inclinations. The empty diagram is the diagram of a
// unit (the full quadrant).
class CanonicalDiagram {
  public:
    CanonicalDiagram() = default;

    // Sorts by inclination and coalesces equal inclinations componentwise.
    static CanonicalDiagram from_pieces(std::vector<ElementaryDiagram> pieces);

    const std::vector<ElementaryDiagram>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }
    std::size_t size() const { return pieces_.size(); }

    // True exactly when the diagram meets both coordinate axes.
    bool convenient() const;

    bool operator==(const CanonicalDiagram&) const = default;

  private:
    std::vector<ElementaryDiagram> pieces_;
};

struct DiagramAnalysis {
    LatticePolygon polygon;    // at-zero vertex chain
    CanonicalDiagram diagram;  // its canonical decomposition
};

// Newton diagram at zero of p with respect to the two axis variables
// (horizontal exponent, vertical exponent). Throws on zero input or when p
// involves other variables.
DiagramAnalysis diagram_from_polynomial(const Polynomial& p, Var horizontal, Var vertical);

CanonicalDiagram minkowski_sum(const CanonicalDiagram& a, const CanonicalDiagram& b);

// Newton polygon at infinity: the far boundary of Conv(supp union {(0,0)}).
// A constant polynomial yields an empty chain. Throws on zero input.
LatticePolygon polygon_at_infinity(const Polynomial& p, Var horizontal, Var vertical);

// Vertex-wise image under (i, k) -> (n(n-1) - i - n k, k), revalidated as an
// at-zero chain; throws std::domain_error when the image is not one.
LatticePolygon apply_infinity_transform(const LatticePolygon& polygon, long long n);

// Canonical decomposition of an at-zero vertex chain.
CanonicalDiagram diagram_from_zero_chain(const LatticePolygon& polygon);

// Re-synthesizes the at-zero vertex chain of a diagram.
LatticePolygon chain_from_diagram(const CanonicalDiagram& diagram);

// Inclination of the last piece; throws std::domain_error on the empty diagram.
Inclination max_inclination(const CanonicalDiagram& diagram);

// "L1,M1;L2,M2" with "inf" for infinite extents; the empty diagram prints "".
std::string to_string(const CanonicalDiagram& diagram);
// Inverse of to_string up to canonicalization; throws std::invalid_argument.
CanonicalDiagram diagram_from_string(const std::string& text);

std::string to_string(const LatticePolygon& polygon);
std::string to_string(const Inclination& inclination);

std::ostream& operator<<(std::ostream& os, const CanonicalDiagram& diagram);
std::ostream& operator<<(std::ostream& os, const LatticePolygon& polygon);

}  // namespace branchcheck
