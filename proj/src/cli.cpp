#include "branchcheck/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "branchcheck/criteria.hpp"
#include "branchcheck/parser.hpp"

namespace branchcheck {

namespace {

using nlohmann::ordered_json;

constexpr int kExitVerdict = 0;
constexpr int kExitError = 1;
constexpr int kExitNotApplicable = 2;

ordered_json json_integer(const Integer& n) {
    if (n.fits_slong_p()) return static_cast<long>(n.get_si());
    return n.get_str();
}

ordered_json json_extent(const Extent& e) {
    if (e.is_infinite()) return "inf";
    return e.value();
}

ordered_json json_diagram(const CanonicalDiagram& diagram) {
    ordered_json pieces = ordered_json::array();
    for (const ElementaryDiagram& piece : diagram.pieces())
        pieces.push_back({json_extent(piece.width), json_extent(piece.height)});
    return pieces;
}

ordered_json json_preconditions(const std::vector<PreconditionCheck>& checks) {
    ordered_json list = ordered_json::array();
    for (const PreconditionCheck& check : checks)
        list.push_back({{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
    return list;
}

ordered_json json_trace(const MerleVerdict& verdict) {
    ordered_json trace;
    trace["H"] = ordered_json::array();
    for (const Integer& h : verdict.height_sums) trace["H"].push_back(json_integer(h));
    trace["C"] = ordered_json::array();
    for (const Rational& c : verdict.candidates) trace["C"].push_back(to_string(c));
    trace["conditions"] = ordered_json::array();
    for (const MerleCondition& condition : verdict.conditions)
        trace["conditions"].push_back(
            {{"name", condition.name}, {"pass", condition.pass}, {"detail", condition.detail}});
    return trace;
}

// One fixed document shape for every subcommand keeps the output schema small.
struct OutputDoc {
    std::optional<std::string> verdict;
    std::optional<std::string> reason;
    std::optional<std::vector<Integer>> semigroup;
    std::optional<CanonicalDiagram> diagram;
    std::optional<AbhyankarMohReport> am;
    std::optional<Rational> point;
    std::vector<PreconditionCheck> preconditions;
    const MerleVerdict* merle = nullptr;
    bool trace = false;
};

ordered_json to_json(const OutputDoc& doc) {
    ordered_json out;
    out["verdict"] = doc.verdict ? ordered_json(*doc.verdict) : nullptr;
    out["reason"] = doc.reason ? ordered_json(*doc.reason) : nullptr;
    if (doc.semigroup) {
        ordered_json list = ordered_json::array();
        for (const Integer& b : *doc.semigroup) list.push_back(json_integer(b));
        out["semigroup"] = list;
    } else {
        out["semigroup"] = nullptr;
    }
    out["diagram"] = doc.diagram ? json_diagram(*doc.diagram) : ordered_json(nullptr);
    if (doc.am) {
        out["am"] = {{"q", to_string(doc.am->max_inclination)},
                     {"n", doc.am->degree},
                     {"holds", doc.am->holds}};
    } else {
        out["am"] = nullptr;
    }
    out["point"] = doc.point ? ordered_json(to_string(*doc.point)) : nullptr;
    out["preconditions"] = json_preconditions(doc.preconditions);
    out["trace"] =
        (doc.trace && doc.merle) ? json_trace(*doc.merle) : ordered_json(nullptr);
    return out;
}

void print_preconditions(std::ostream& out, const std::vector<PreconditionCheck>& checks) {
    if (checks.empty()) return;
    out << "preconditions:\n";
    for (const PreconditionCheck& check : checks) {
        out << "  " << check.name << ": " << (check.pass ? "pass" : "FAIL");
        if (!check.detail.empty()) out << " (" << check.detail << ")";
        out << "\n";
    }
}

void print_merle_trace(std::ostream& out, const MerleVerdict& verdict) {
    out << "H:";
    for (const Integer& h : verdict.height_sums) out << ' ' << h;
    out << "\nC:";
    for (const Rational& c : verdict.candidates) out << ' ' << to_string(c);
    out << "\nconditions:\n";
    for (const MerleCondition& condition : verdict.conditions) {
        out << "  (" << condition.name << "): " << (condition.pass ? "pass" : "FAIL");
        if (!condition.detail.empty()) out << " (" << condition.detail << ")";
        out << "\n";
    }
}

std::string semigroup_text(const std::vector<Integer>& generators) {
    std::ostringstream os;
    os << '<';
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (k) os << ',';
        os << generators[k];
    }
    os << '>';
    return os.str();
}

enum class PipelineKind { Origin, Point, Infinity };

int emit_report(const IrreducibilityReport& report, PipelineKind kind, bool json, bool trace,
                std::ostream& out) {
    OutputDoc doc;
    doc.verdict = to_string(report.verdict);
    if (!report.reason.empty()) doc.reason = report.reason;
    doc.semigroup = report.semigroup;
    doc.diagram = report.diagram;
    doc.point = report.point;
    doc.preconditions = report.preconditions;
    doc.merle = report.merle ? &*report.merle : nullptr;
    doc.trace = trace;
    if (json) {
        out << to_json(doc).dump(2) << "\n";
    } else {
        if (trace) {
            print_preconditions(out, report.preconditions);
            if (report.discriminant)
                out << "discriminant: " << *report.discriminant << "\n";
            if (report.infinity_polygon)
                out << "newton polygon at infinity: " << *report.infinity_polygon << "\n";
            if (report.transformed_polygon)
                out << "transformed polygon at zero: " << *report.transformed_polygon << "\n";
        }
        if (report.diagram) out << "diagram: " << *report.diagram << "\n";
        if (trace && report.merle) print_merle_trace(out, *report.merle);

        const std::string at_infinity = " at the point at infinity";
        switch (report.verdict) {
            case Verdict::Irreducible:
                out << "irreducible" << (kind == PipelineKind::Infinity ? at_infinity : "")
                    << "; semigroup " << semigroup_text(*report.semigroup) << "\n";
                break;
            case Verdict::Reducible:
                out << "reducible" << (kind == PipelineKind::Infinity ? at_infinity : "")
                    << "; not a Merle type diagram: " << report.merle->failure << "\n";
                break;
            case Verdict::Smooth:
                if (kind == PipelineKind::Point)
                    out << "smooth at (0," << to_string(*report.point)
                        << ") (trivially irreducible)\n";
                else
                    out << "smooth at origin (trivially irreducible)\n";
                break;
            case Verdict::NotApplicable:
                out << "not applicable: " << report.reason << "\n";
                break;
        }
    }
    return report.verdict == Verdict::NotApplicable ? kExitNotApplicable : kExitVerdict;
}

int run_diagram(const Polynomial& f, bool json, bool trace, std::ostream& out) {
    JacobianDiagramResult result = jacobian_newton_diagram(f);
    OutputDoc doc;
    doc.preconditions = result.checks;
    doc.trace = trace;
    if (!result.ok) {
        doc.verdict = "not-applicable";
        doc.reason = result.failure;
        if (json)
            out << to_json(doc).dump(2) << "\n";
        else
            out << "not applicable: " << result.failure << "\n";
        return kExitNotApplicable;
    }
    doc.diagram = result.diagram;
    if (json) {
        out << to_json(doc).dump(2) << "\n";
    } else {
        if (trace) {
            print_preconditions(out, result.checks);
            out << "discriminant: " << result.discriminant << "\n";
        }
        out << "diagram: " << to_string(result.diagram) << "\n";
    }
    return kExitVerdict;
}

int run_merle(const CanonicalDiagram& diagram, bool json, bool trace, std::ostream& out) {
    MerleVerdict verdict = merle_test(diagram);
    OutputDoc doc;
    doc.verdict = verdict.is_merle ? "merle" : "not-merle";
    if (!verdict.is_merle) doc.reason = verdict.failure;
    if (verdict.is_merle) doc.semigroup = verdict.generators;
    doc.diagram = diagram;
    doc.merle = &verdict;
    doc.trace = trace;
    if (json) {
        out << to_json(doc).dump(2) << "\n";
    } else {
        out << "diagram: " << to_string(diagram) << "\n";
        if (trace) print_merle_trace(out, verdict);
        if (verdict.is_merle) {
            out << "Merle type diagram M(";
            for (std::size_t k = 0; k < verdict.generators.size(); ++k)
                out << (k ? "," : "") << verdict.generators[k];
            out << ")\n";
        } else {
            out << "not Merle: " << verdict.failure << "\n";
        }
    }
    return kExitVerdict;
}

int run_am(const Polynomial& p, bool json, bool trace, std::ostream& out) {
    AbhyankarMohReport report = abhyankar_moh_check(p);
    OutputDoc doc;
    doc.preconditions = report.preconditions;
    doc.trace = trace;
    if (!report.applicable) {
        doc.verdict = "not-applicable";
        doc.reason = report.reason;
        if (json)
            out << to_json(doc).dump(2) << "\n";
        else
            out << "not applicable: " << report.reason << "\n";
        return kExitNotApplicable;
    }
    doc.am = report;
    if (json) {
        out << to_json(doc).dump(2) << "\n";
    } else {
        if (trace) print_preconditions(out, report.preconditions);
        out << "Abhyankar-Moh inequality " << (report.holds ? "holds" : "fails") << ": q = "
            << to_string(report.max_inclination) << (report.holds ? " < " : " >= ") << "n = "
            << report.degree << "\n";
    }
    return kExitVerdict;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"irreducibility of a plane curve branch via discriminant Newton diagrams"};
    app.require_subcommand(1);

    std::string polynomial_text;
    std::string diagram_text;
    std::string point_text;
    bool json = false;
    bool trace = false;

    auto add_output_flags = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "emit one JSON object (see schema/)");
        sub->add_flag("--trace", trace, "include discriminants, polygons and the H/C table");
    };
    const char* grammar = "polynomial in x, y; explicit '*', '^' with nonnegative integer "
                          "exponents, rational constants like 1/2";

    CLI::App* local = app.add_subcommand("local", "analytic irreducibility at the origin");
    local->add_option("polynomial", polynomial_text, grammar)->required();
    add_output_flags(local);

    CLI::App* at_point =
        app.add_subcommand("at-point", "analytic irreducibility at (0, y0) on x = 0");
    at_point->add_option("polynomial", polynomial_text, grammar)->required();
    at_point->add_option("--point", point_text, "rational y0, e.g. 3/2 (detected when omitted)");
    add_output_flags(at_point);

    CLI::App* infinity =
        app.add_subcommand("infinity", "analytic irreducibility at the single point at infinity");
    infinity->add_option("polynomial", polynomial_text, grammar)->required();
    add_output_flags(infinity);

    CLI::App* diagram =
        app.add_subcommand("diagram", "Newton diagram of the discriminant of (x, f)");
    diagram->add_option("polynomial", polynomial_text, grammar)->required();
    add_output_flags(diagram);

    CLI::App* merle = app.add_subcommand("merle", "Merle-type test for a Newton diagram");
    merle->add_option("diagram", diagram_text, "pieces L1,M1;L2,M2;... with inf allowed")
        ->required();
    add_output_flags(merle);

    CLI::App* am = app.add_subcommand("am", "Abhyankar-Moh inequality q < n at infinity");
    am->add_option("polynomial", polynomial_text, grammar)->required();
    add_output_flags(am);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& help) {
        out << app.help();
        return kExitVerdict;
    } catch (const CLI::ParseError& error) {
        err << "error: " << error.what() << "\n";
        return kExitError;
    }

    try {
        if (merle->parsed()) {
            CanonicalDiagram d;
            try {
                d = diagram_from_string(diagram_text);
            } catch (const std::invalid_argument& error) {
                err << "parse error: " << error.what() << "\n";
                return kExitError;
            }
            return run_merle(d, json, trace, out);
        }

        Polynomial input;
        try {
            input = parse_polynomial(polynomial_text, VarSet{Var::x, Var::y});
        } catch (const ParseError& error) {
            err << "parse error at " << error.position() << ": " << error.what() << "\n";
            return kExitError;
        }

        if (local->parsed())
            return emit_report(irreducible_at_origin(input), PipelineKind::Origin, json, trace,
                               out);
        if (at_point->parsed()) {
            std::optional<Rational> y0;
            if (!point_text.empty()) {
                try {
                    y0 = rational_from_string(point_text);
                } catch (const std::exception& error) {
                    err << "parse error: " << error.what() << "\n";
                    return kExitError;
                }
            }
            return emit_report(irreducible_at_point(input, y0), PipelineKind::Point, json, trace,
                               out);
        }
        if (infinity->parsed())
            return emit_report(irreducible_at_infinity(input), PipelineKind::Infinity, json,
                               trace, out);
        if (diagram->parsed()) return run_diagram(input, json, trace, out);
        if (am->parsed()) return run_am(input, json, trace, out);
    } catch (const std::exception& error) {
        err << "internal error: " << error.what() << "\n";
        return kExitError;
    }
    err << "error: no subcommand\n";
    return kExitError;
}

}  // namespace branchcheck
