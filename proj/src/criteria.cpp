#include "branchcheck/criteria.hpp"

#include <stdexcept>

namespace branchcheck {

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Irreducible: return "irreducible";
        case Verdict::Reducible: return "reducible";
        case Verdict::Smooth: return "smooth";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "not-applicable";
}

namespace {

void record(std::vector<PreconditionCheck>& checks, const std::string& name, bool pass,
            const std::string& detail = "") {
    checks.push_back({name, pass, detail});
}

// f(0,y) = c y^m q(y) with q(0) != 0; true when gcd(q, q') is constant.
bool nonzero_roots_simple(const Polynomial& f0) {
    unsigned m = static_cast<unsigned>(f0.terms().rbegin()->first.exponent(Var::y));
    Polynomial q;
    for (const auto& [mono, c] : f0.terms())
        q += Polynomial::term(Monomial::variable(Var::y, mono.exponent(Var::y) - m), c);
    if (q.degree_in(Var::y) < 1) return true;
    return univariate_gcd(q, q.derivative(Var::y), Var::y).is_constant();
}

}  // namespace

JacobianDiagramResult jacobian_newton_diagram(const Polynomial& f) {
    if (!f.uses_only(VarSet{Var::x, Var::y}))
        throw std::invalid_argument("jacobian_newton_diagram: input must be a polynomial in x, y");

    JacobianDiagramResult result;
    auto fail = [&](const std::string& name, const std::string& detail) {
        record(result.checks, name, false, detail);
        result.failure = detail;
        return result;
    };

    if (f.is_zero()) return fail("nonzero", "the zero polynomial has no Newton diagram");
    record(result.checks, "nonzero", true);

    if (f.degree_in(Var::y) < 1) return fail("positive-y-degree", "f has y-degree 0");
    record(result.checks, "positive-y-degree", true);

    if (!f.leading_coefficient_in(Var::y).is_constant())
        return fail("leading-coefficient-constant",
                    "the leading coefficient of f in y is not constant");
    record(result.checks, "leading-coefficient-constant", true);

    Polynomial f0 = f.evaluate_at_zero(Var::x);
    if (f0.is_zero())
        return fail("f(0,y)-nonzero", "f(0,y) = 0, so x divides f; translate coordinates");
    record(result.checks, "f(0,y)-nonzero", true);

    if (!nonzero_roots_simple(f0))
        return fail("nonzero-roots-simple",
                    "f(0,y) has a repeated nonzero root; translate coordinates");
    record(result.checks, "nonzero-roots-simple", true);

    if (discriminant_in(f, Var::y).is_zero())
        return fail("input-reduced", "input not reduced: f and its y-derivative share a factor");
    record(result.checks, "input-reduced", true);

    result.discriminant = discriminant_surface(f);
    result.diagram = diagram_from_polynomial(result.discriminant, Var::u, Var::v).diagram;
    result.ok = true;
    return result;
}

namespace {

IrreducibilityReport not_applicable(IrreducibilityReport report, std::string reason) {
    report.verdict = Verdict::NotApplicable;
    report.reason = std::move(reason);
    return report;
}

// Nested pipelines re-verify some checks; keep the first record of each name.
void append_checks(std::vector<PreconditionCheck>& into,
                   const std::vector<PreconditionCheck>& from) {
    for (const PreconditionCheck& check : from) {
        bool seen = false;
        for (const PreconditionCheck& existing : into)
            if (existing.name == check.name) seen = true;
        if (!seen) into.push_back(check);
    }
}

IrreducibilityReport decide_from_diagram(IrreducibilityReport report) {
    report.merle = merle_test(*report.diagram);
    if (report.merle->is_merle) {
        report.verdict = Verdict::Irreducible;
        report.semigroup = report.merle->generators;
    } else {
        report.verdict = Verdict::Reducible;
    }
    return report;
}

}  // namespace

IrreducibilityReport irreducible_at_origin(const Polynomial& f) {
    IrreducibilityReport report;
    if (f.is_zero()) {
        record(report.preconditions, "nonzero", false, "the zero polynomial is not a curve");
        return not_applicable(std::move(report), "the zero polynomial is not a curve");
    }
    record(report.preconditions, "nonzero", true);

    if (f.constant_term() != 0) {
        record(report.preconditions, "passes-through-origin", false, "f(0,0) != 0");
        return not_applicable(std::move(report), "the curve does not pass through the origin");
    }
    record(report.preconditions, "passes-through-origin", true);

    if (f.ord_at_origin() == 1) {
        report.verdict = Verdict::Smooth;
        return report;
    }

    JacobianDiagramResult jd = jacobian_newton_diagram(f);
    append_checks(report.preconditions, jd.checks);
    if (!jd.ok) return not_applicable(std::move(report), jd.failure);

    report.diagram = std::move(jd.diagram);
    report.discriminant = std::move(jd.discriminant);
    return decide_from_diagram(std::move(report));
}

IrreducibilityReport irreducible_at_point(const Polynomial& f, std::optional<Rational> y0) {
    IrreducibilityReport report;
    if (f.is_zero()) {
        record(report.preconditions, "nonzero", false, "the zero polynomial is not a curve");
        return not_applicable(std::move(report), "the zero polynomial is not a curve");
    }
    record(report.preconditions, "nonzero", true);

    const long long n = f.degree_in(Var::y);
    if (n < 1) {
        record(report.preconditions, "positive-y-degree", false, "f has y-degree 0");
        return not_applicable(std::move(report), "f has y-degree 0");
    }
    record(report.preconditions, "positive-y-degree", true);

    Polynomial lead = f.leading_coefficient_in(Var::y);
    if (!lead.is_constant()) {
        record(report.preconditions, "leading-coefficient-constant", false,
               "the leading coefficient of f in y is not constant");
        return not_applicable(std::move(report),
                              "the leading coefficient of f in y is not constant");
    }
    record(report.preconditions, "leading-coefficient-constant", true);

    const Rational c = lead.constant_term();
    Polynomial f0 = f.evaluate_at_zero(Var::x);
    Rational point = y0 ? *y0
                        : -f0.coefficient_in(Var::y, static_cast<unsigned>(n - 1)).constant_term() /
                              (Rational(static_cast<long>(n)) * c);
    Polynomial expected =
        c * (Polynomial::variable(Var::y) - Polynomial(point)).pow(static_cast<unsigned>(n));
    if (f0 != expected) {
        record(report.preconditions, "meets-x=0-in-one-point", false,
               "f(0,y) is not c*(y - y0)^N with rational y0");
        return not_applicable(std::move(report),
                              "the curve does not meet x = 0 in a single rational point");
    }
    record(report.preconditions, "meets-x=0-in-one-point", true);
    report.point = point;

    Polynomial shifted = f.shift(Var::y, point);
    bool invariant = discriminant_surface(f) == discriminant_surface(shifted);
    record(report.preconditions, "discriminant-shift-invariant", invariant);
    if (!invariant)
        return not_applicable(std::move(report),
                              "internal inconsistency: discriminant changed under the shift");

    IrreducibilityReport local = irreducible_at_origin(shifted);
    append_checks(report.preconditions, local.preconditions);
    local.preconditions = std::move(report.preconditions);
    local.point = point;
    return local;
}

IrreducibilityReport irreducible_at_infinity(const Polynomial& p) {
    IrreducibilityReport report;
    if (p.is_zero()) {
        record(report.preconditions, "nonzero", false, "the zero polynomial is not a curve");
        return not_applicable(std::move(report), "the zero polynomial is not a curve");
    }
    record(report.preconditions, "nonzero", true);

    const long long n = p.total_degree();
    if (n < 1) {
        record(report.preconditions, "positive-degree", false, "p is constant");
        return not_applicable(std::move(report), "p is constant");
    }
    record(report.preconditions, "positive-degree", true);

    Polynomial form = p.leading_form(FormMode::Highest);
    const long long form_y_degree = form.uses(Var::y) ? form.degree_in(Var::y) : 0;
    if (form_y_degree < n) {
        std::string detail = form_y_degree == 0
                                 ? "the only point at infinity is (0:1:0)"
                                 : "(0:1:0) is one of the points at infinity";
        record(report.preconditions, "point-at-infinity-not-(0:1:0)", false, detail);
        return not_applicable(std::move(report), detail);
    }
    record(report.preconditions, "point-at-infinity-not-(0:1:0)", true);

    const Rational c = form.coefficient_in(Var::y, static_cast<unsigned>(n)).constant_term();
    const Rational slope_coefficient =
        form.coefficient_in(Var::y, static_cast<unsigned>(n - 1)).coefficient_in(Var::x, 1).constant_term();
    const Rational y0 = -slope_coefficient / (Rational(static_cast<long>(n)) * c);
    Polynomial linear = Polynomial::variable(Var::y) - y0 * Polynomial::variable(Var::x);
    if (form != c * linear.pow(static_cast<unsigned>(n))) {
        record(report.preconditions, "one-point-at-infinity", false,
               "the leading form is not the n-th power of a rational linear form");
        return not_applicable(std::move(report),
                              "the curve has several points at infinity or an irrational one");
    }
    record(report.preconditions, "one-point-at-infinity", true);
    report.point = y0;

    if (discriminant_in(p, Var::y).is_zero()) {
        record(report.preconditions, "squarefree", false, "p has a repeated factor");
        return not_applicable(std::move(report), "p has a repeated factor");
    }
    record(report.preconditions, "squarefree", true);

    report.discriminant = discriminant_fiber(p);
    report.infinity_polygon = polygon_at_infinity(*report.discriminant, Var::x, Var::t);
    if (report.infinity_polygon->vertices.empty()) {
        record(report.preconditions, "discriminant-polygon-nonempty", false,
               "the fiber discriminant is constant (degree-1 curve)");
        return not_applicable(std::move(report),
                              "the fiber discriminant is constant (degree-1 curve)");
    }
    record(report.preconditions, "discriminant-polygon-nonempty", true);

    try {
        report.transformed_polygon = apply_infinity_transform(*report.infinity_polygon, n);
    } catch (const std::domain_error& error) {
        record(report.preconditions, "transform-image-valid", false, error.what());
        return not_applicable(std::move(report), error.what());
    }
    record(report.preconditions, "transform-image-valid", true);

    report.diagram = diagram_from_zero_chain(*report.transformed_polygon);
    return decide_from_diagram(std::move(report));
}

AbhyankarMohReport abhyankar_moh_check(const Polynomial& p) {
    AbhyankarMohReport result;
    IrreducibilityReport infinity = irreducible_at_infinity(p);
    result.preconditions = infinity.preconditions;
    if (infinity.verdict == Verdict::NotApplicable) {
        result.reason = infinity.reason;
        return result;
    }
    result.applicable = true;
    result.degree = p.total_degree();
    result.max_inclination = max_inclination(*infinity.diagram);
    result.holds = !result.max_inclination.infinite &&
                   result.max_inclination.value < Rational(to_integer(result.degree));
    return result;
}

}  // namespace branchcheck
