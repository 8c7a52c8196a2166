#include "branchcheck/merle.hpp"

#include <sstream>
#include <stdexcept>

namespace branchcheck {

namespace {

std::string join(const std::vector<Integer>& values) {
    std::ostringstream os;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) os << ',';
        os << values[k];
    }
    return os.str();
}

}  // namespace

GeneratorValidation validate_generators(const std::vector<Integer>& b) {
    if (b.size() < 2)
        throw std::invalid_argument("generator sequence needs at least two entries");
    for (const Integer& entry : b)
        if (entry <= 0) throw std::invalid_argument("generator entries must be positive");

    GeneratorValidation result;
    const std::size_t h = b.size() - 1;
    Integer g = b[0];
    result.z1 = true;
    for (std::size_t k = 1; k <= h; ++k) {
        Integer next = integer_gcd(g, b[k]);
        result.ratios.push_back(g / next);
        if (result.ratios.back() <= 1) {
            result.z1 = false;
            result.detail = "n_" + std::to_string(k) + " = " + to_string(result.ratios.back()) +
                            " is not > 1";
            break;
        }
        g = next;
    }
    if (result.z1 && g != 1) {
        result.z1 = false;
        result.detail = "n_1*...*n_h = " + to_string(Integer(b[0] / g)) + " != b_0 = " + to_string(b[0]);
    }
    if (!result.z1) return result;

    result.z2 = true;
    for (std::size_t k = 1; k < h; ++k) {
        if (result.ratios[k - 1] * b[k] >= b[k + 1]) {
            result.z2 = false;
            result.detail = "n_" + std::to_string(k) + "*b_" + std::to_string(k) + " = " +
                            to_string(Integer(result.ratios[k - 1] * b[k])) +
                            " is not < b_" + std::to_string(k + 1) + " = " + to_string(b[k + 1]);
            break;
        }
    }
    return result;
}

CanonicalDiagram merle_diagram(const std::vector<Integer>& b) {
    GeneratorValidation check = validate_generators(b);
    if (!check.ok())
        throw std::invalid_argument("invalid generator sequence: " + check.detail);

    std::vector<ElementaryDiagram> pieces;
    Integer prefix = 1;  // n_1 * ... * n_{k-1}
    for (std::size_t k = 1; k < b.size(); ++k) {
        Integer factor = check.ratios[k - 1] - 1;
        Integer width = factor * b[k];
        Integer height = factor * prefix;
        if (!width.fits_slong_p() || !height.fits_slong_p())
            throw std::invalid_argument("generator sequence too large for diagram extents");
        pieces.emplace_back(Extent::finite(width.get_si()), Extent::finite(height.get_si()));
        prefix *= check.ratios[k - 1];
    }
    return CanonicalDiagram::from_pieces(std::move(pieces));
}

MerleVerdict merle_test(const CanonicalDiagram& diagram) {
    MerleVerdict verdict;
    auto fail = [&](const std::string& name, const std::string& detail,
                    const std::string& failure) {
        verdict.conditions.push_back({name, false, detail});
        verdict.failure = failure;
        return verdict;
    };

    if (diagram.empty()) return fail("nonempty", "the diagram has no pieces", "empty diagram");
    verdict.conditions.push_back({"nonempty", true, ""});

    if (!diagram.convenient())
        return fail("convenient", "the diagram does not meet both coordinate axes",
                    "diagram is not convenient");
    verdict.conditions.push_back({"convenient", true, ""});

    const std::size_t h = diagram.size();
    std::vector<Integer> widths, heights;
    for (const ElementaryDiagram& piece : diagram.pieces()) {
        widths.push_back(to_integer(piece.width.value()));
        heights.push_back(to_integer(piece.height.value()));
    }

    verdict.height_sums.assign(1, Integer(1));
    for (std::size_t k = 0; k < h; ++k)
        verdict.height_sums.push_back(verdict.height_sums.back() + heights[k]);

    verdict.candidates.assign(1, Rational(verdict.height_sums[h]));
    for (std::size_t k = 1; k <= h; ++k)
        verdict.candidates.push_back(
            make_rational(verdict.height_sums[k - 1] * widths[k - 1], heights[k - 1]));

    for (std::size_t i = 2; i <= h; ++i) {
        if (verdict.height_sums[i] % verdict.height_sums[i - 1] != 0) {
            std::string ratio = "H" + std::to_string(i) + "/H" + std::to_string(i - 1) + " = " +
                                to_string(make_rational(verdict.height_sums[i],
                                                        verdict.height_sums[i - 1])) +
                                " is not an integer";
            return fail("i", ratio,
                        "condition (i) fails at i=" + std::to_string(i) + " (" + ratio + ")");
        }
    }
    verdict.conditions.push_back({"i", true, ""});

    for (std::size_t i = 1; i <= h; ++i) {
        if (!is_integer(verdict.candidates[i])) {
            std::string detail = "C" + std::to_string(i) + " = " +
                                 to_string(verdict.candidates[i]) + " is not an integer";
            return fail("ii", detail,
                        "condition (ii) fails at i=" + std::to_string(i) + " (" + detail + ")");
        }
    }
    verdict.conditions.push_back({"ii", true, ""});

    std::vector<Integer> c;
    for (const Rational& value : verdict.candidates) c.push_back(value.get_num());
    Integer g = c[0];
    for (std::size_t i = 1; i <= h; ++i) {
        g = integer_gcd(g, c[i]);
        Rational expected = make_rational(c[0], verdict.height_sums[i]);
        if (Rational(g) != expected) {
            std::string detail = "gcd(" + join(std::vector<Integer>(c.begin(), c.begin() + i + 1)) +
                                 ")=" + to_string(g) + ", expected " + to_string(expected);
            return fail("iii", detail,
                        "condition (iii) fails at i=" + std::to_string(i) + " (gcd=" +
                            to_string(g) + ", expected " + to_string(expected) + ")");
        }
    }
    verdict.conditions.push_back({"iii", true, ""});

    verdict.is_merle = true;
    verdict.generators = std::move(c);
    return verdict;
}

}  // namespace branchcheck
