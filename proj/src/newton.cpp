#include "branchcheck/newton.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace branchcheck {

Extent Extent::finite(long long n) {
    if (n < 1) throw std::invalid_argument("diagram extents must be positive");
    Extent e;
    e.n_ = n;
    return e;
}

Extent Extent::infinite() {
    Extent e;
    e.infinite_ = true;
    return e;
}

long long Extent::value() const {
    if (infinite_) throw std::logic_error("value() of an infinite extent");
    return n_;
}

ElementaryDiagram::ElementaryDiagram(Extent w, Extent h) : width(w), height(h) {
    if (width.is_infinite() && height.is_infinite())
        throw std::invalid_argument("elementary diagram with both extents infinite");
}

int compare_inclination(const ElementaryDiagram& a, const ElementaryDiagram& b) {
    if (a.width.is_infinite()) return b.width.is_infinite() ? 0 : 1;
    if (b.width.is_infinite()) return -1;
    if (a.height.is_infinite()) return b.height.is_infinite() ? 0 : -1;
    if (b.height.is_infinite()) return 1;
    Integer lhs = to_integer(a.width.value()) * to_integer(b.height.value());
    Integer rhs = to_integer(b.width.value()) * to_integer(a.height.value());
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

Inclination inclination_of(const ElementaryDiagram& piece) {
    if (piece.width.is_infinite()) return {true, Rational(0)};
    if (piece.height.is_infinite()) return {false, Rational(0)};
    return {false, make_rational(to_integer(piece.width.value()), to_integer(piece.height.value()))};
}

CanonicalDiagram CanonicalDiagram::from_pieces(std::vector<ElementaryDiagram> pieces) {
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const ElementaryDiagram& a, const ElementaryDiagram& b) {
                         return compare_inclination(a, b) < 0;
                     });
    CanonicalDiagram d;
    for (const ElementaryDiagram& piece : pieces) {
        if (!d.pieces_.empty() && compare_inclination(d.pieces_.back(), piece) == 0) {
            ElementaryDiagram& last = d.pieces_.back();
            last = ElementaryDiagram(last.width + piece.width, last.height + piece.height);
        } else {
            d.pieces_.push_back(piece);
        }
    }
    return d;
}

bool CanonicalDiagram::convenient() const {
    if (pieces_.empty()) return true;
    return !pieces_.front().height.is_infinite() && !pieces_.back().width.is_infinite();
}

namespace {

long long cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& p) {
    return (b.i - a.i) * (p.j - a.j) - (b.j - a.j) * (p.i - a.i);
}

std::vector<LatticePoint> support_points(const Polynomial& p, Var horizontal, Var vertical) {
    if (p.is_zero()) throw std::domain_error("Newton polygon of the zero polynomial");
    if (!p.uses_only(VarSet{horizontal, vertical}))
        throw std::invalid_argument("polynomial involves variables outside the chosen axes");
    std::vector<LatticePoint> pts;
    pts.reserve(p.term_count());
    for (const auto& [m, c] : p.terms())
        pts.push_back({static_cast<long long>(m.exponent(horizontal)),
                       static_cast<long long>(m.exponent(vertical))});
    return pts;
}

void validate_zero_chain(const std::vector<LatticePoint>& chain) {
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (chain[k].i < 0 || chain[k].j < 0)
            throw std::domain_error("at-zero chain has a negative coordinate");
        if (k > 0 && !(chain[k - 1].i < chain[k].i && chain[k - 1].j > chain[k].j))
            throw std::domain_error("at-zero chain is not strictly monotone");
    }
}

}  // namespace

DiagramAnalysis diagram_from_polynomial(const Polynomial& p, Var horizontal, Var vertical) {
    std::vector<LatticePoint> pts = support_points(p, horizontal, vertical);

    // Pareto staircase: minimal j for each i, then strictly decreasing in j.
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    std::vector<LatticePoint> staircase;
    for (const LatticePoint& pt : pts) {
        if (!staircase.empty() && staircase.back().i == pt.i) continue;
        if (!staircase.empty() && pt.j >= staircase.back().j) continue;
        staircase.push_back(pt);
    }

    // Lower convex hull of the staircase: keep vertices strictly below chords.
    std::vector<LatticePoint> chain;
    for (const LatticePoint& pt : staircase) {
        while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), pt) <= 0)
            chain.pop_back();
        chain.push_back(pt);
    }

    LatticePolygon polygon{PolygonKind::AtZero, std::move(chain)};
    CanonicalDiagram diagram = diagram_from_zero_chain(polygon);
    return {std::move(polygon), std::move(diagram)};
}

CanonicalDiagram minkowski_sum(const CanonicalDiagram& a, const CanonicalDiagram& b) {
    std::vector<ElementaryDiagram> pieces = a.pieces();
    pieces.insert(pieces.end(), b.pieces().begin(), b.pieces().end());
    return CanonicalDiagram::from_pieces(std::move(pieces));
}

LatticePolygon polygon_at_infinity(const Polynomial& p, Var horizontal, Var vertical) {
    std::vector<LatticePoint> pts = support_points(p, horizontal, vertical);
    pts.push_back({0, 0});
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    if (pts.size() == 1) return {PolygonKind::AtInfinity, {}};

    // Andrew's monotone chain; strict turns only, so collinear interior
    // points are dropped.
    auto build = [](auto first, auto last) {
        std::vector<LatticePoint> hull;
        for (auto it = first; it != last; ++it) {
            while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
                hull.pop_back();
            hull.push_back(*it);
        }
        return hull;
    };
    std::vector<LatticePoint> lower = build(pts.begin(), pts.end());
    std::vector<LatticePoint> upper = build(pts.rbegin(), pts.rend());

    std::vector<LatticePoint> cycle(lower.begin(), lower.end() - 1);
    cycle.insert(cycle.end(), upper.begin(), upper.end() - 1);

    // The origin is the lexicographic minimum, hence cycle.front(); the away
    // chain is the rest of the counterclockwise cycle reversed, which lists
    // it from the vertical-axis end to the horizontal-axis end.
    std::vector<LatticePoint> away(cycle.rbegin(), cycle.rend() - 1);
    return {PolygonKind::AtInfinity, std::move(away)};
}

LatticePolygon apply_infinity_transform(const LatticePolygon& polygon, long long n) {
    if (polygon.kind != PolygonKind::AtInfinity)
        throw std::invalid_argument("apply_infinity_transform expects an at-infinity polygon");
    if (n < 1) throw std::domain_error("apply_infinity_transform requires n >= 1");
    std::vector<LatticePoint> image;
    image.reserve(polygon.vertices.size());
    for (const LatticePoint& pt : polygon.vertices)
        image.push_back({n * (n - 1) - pt.i - n * pt.j, pt.j});
    validate_zero_chain(image);
    return {PolygonKind::AtZero, std::move(image)};
}

CanonicalDiagram diagram_from_zero_chain(const LatticePolygon& polygon) {
    if (polygon.kind != PolygonKind::AtZero)
        throw std::invalid_argument("diagram_from_zero_chain expects an at-zero polygon");
    if (polygon.vertices.empty())
        throw std::invalid_argument("diagram_from_zero_chain: empty vertex chain");
    validate_zero_chain(polygon.vertices);
    const std::vector<LatticePoint>& chain = polygon.vertices;
    std::vector<ElementaryDiagram> pieces;
    if (chain.front().i > 0)
        pieces.emplace_back(Extent::finite(chain.front().i), Extent::infinite());
    for (std::size_t k = 1; k < chain.size(); ++k)
        pieces.emplace_back(Extent::finite(chain[k].i - chain[k - 1].i),
                            Extent::finite(chain[k - 1].j - chain[k].j));
    if (chain.back().j > 0)
        pieces.emplace_back(Extent::infinite(), Extent::finite(chain.back().j));
    return CanonicalDiagram::from_pieces(std::move(pieces));
}

LatticePolygon chain_from_diagram(const CanonicalDiagram& diagram) {
    long long offset = 0;
    long long bottom = 0;
    std::vector<ElementaryDiagram> finite(diagram.pieces());
    if (!finite.empty() && finite.front().height.is_infinite()) {
        offset = finite.front().width.value();
        finite.erase(finite.begin());
    }
    if (!finite.empty() && finite.back().width.is_infinite()) {
        bottom = finite.back().height.value();
        finite.pop_back();
    }
    long long top = bottom;
    for (const ElementaryDiagram& piece : finite) top += piece.height.value();

    std::vector<LatticePoint> chain;
    LatticePoint at{offset, top};
    chain.push_back(at);
    for (const ElementaryDiagram& piece : finite) {
        at.i += piece.width.value();
        at.j -= piece.height.value();
        chain.push_back(at);
    }
    return {PolygonKind::AtZero, std::move(chain)};
}

Inclination max_inclination(const CanonicalDiagram& diagram) {
    if (diagram.empty()) throw std::domain_error("max_inclination of an empty diagram");
    return inclination_of(diagram.pieces().back());
}

namespace {

std::string extent_to_string(const Extent& e) {
    return e.is_infinite() ? "inf" : std::to_string(e.value());
}

Extent extent_from_string(const std::string& token) {
    if (token == "inf") return Extent::infinite();
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("invalid diagram extent '" + token + "'");
    long long n = 0;
    try {
        n = std::stoll(token);
    } catch (const std::exception&) {
        throw std::invalid_argument("diagram extent out of range '" + token + "'");
    }
    return Extent::finite(n);
}

}  // namespace

std::string to_string(const CanonicalDiagram& diagram) {
    std::ostringstream os;
    bool first = true;
    for (const ElementaryDiagram& piece : diagram.pieces()) {
        if (!first) os << ';';
        first = false;
        os << extent_to_string(piece.width) << ',' << extent_to_string(piece.height);
    }
    return os.str();
}

CanonicalDiagram diagram_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty diagram string");
    std::vector<ElementaryDiagram> pieces;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        std::string part = text.substr(pos, end == std::string::npos ? end : end - pos);
        std::size_t comma = part.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("diagram piece '" + part + "' is not of the form L,M");
        pieces.emplace_back(extent_from_string(part.substr(0, comma)),
                            extent_from_string(part.substr(comma + 1)));
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    return CanonicalDiagram::from_pieces(std::move(pieces));
}

std::string to_string(const LatticePolygon& polygon) {
    std::ostringstream os;
    bool first = true;
    for (const LatticePoint& pt : polygon.vertices) {
        if (!first) os << ' ';
        first = false;
        os << '(' << pt.i << ',' << pt.j << ')';
    }
    return os.str();
}

std::string to_string(const Inclination& inclination) {
    return inclination.infinite ? "inf" : to_string(inclination.value);
}

std::ostream& operator<<(std::ostream& os, const CanonicalDiagram& diagram) {
    return os << to_string(diagram);
}

std::ostream& operator<<(std::ostream& os, const LatticePolygon& polygon) {
    return os << to_string(polygon);
}

}  // namespace branchcheck
