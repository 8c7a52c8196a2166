#pragma once

#include <string>
#include <vector>

#include "branchcheck/newton.hpp"
#include "branchcheck/rational.hpp"

namespace branchcheck {

// Outcome of the arithmetic test on a candidate generator sequence
// b_0, ..., b_h of the semigroup of a branch.
struct GeneratorValidation {
    bool z1 = false;          // every gcd ratio exceeds 1 and their product is b_0
    bool z2 = false;          // ratio_k * b_k < b_{k+1} for k < h
    std::string detail;       // first violated condition, spelled out
    std::vector<Integer> ratios;  // n_1, ..., n_h (n_k = gcd(b_0..b_{k-1}) / gcd(b_0..b_k))

    bool ok() const { return z1 && z2; }
};

// Requires at least two entries, all positive; throws std::invalid_argument
// otherwise.
GeneratorValidation validate_generators(const std::vector<Integer>& b);

// The diagram with one piece of width (n_k - 1) b_k and height
// (n_k - 1) n_1*...*n_{k-1} for each k = 1..h; throws std::invalid_argument
// unless b validates.
CanonicalDiagram merle_diagram(const std::vector<Integer>& b);

struct MerleCondition {
    std::string name;  // "nonempty", "convenient", "i", "ii", "iii"
    bool pass = false;
    std::string detail;
};

// Verdict of the arithmetic Merle-diagram test on a convenient diagram with
// pieces (L_i, M_i): H_0 = 1, H_i = 1 + M_1 + ... + M_i, C_0 = H_h,
// C_i = H_{i-1} L_i / M_i, and the diagram is of Merle type exactly when
//   (i)   H_i / H_{i-1} is an integer for i in 2..h,
//   (ii)  every C_i is an integer,
//   (iii) gcd(C_0, ..., C_i) = C_0 / H_i for i in 1..h,
// in which case the generators are (C_0, ..., C_h).
struct MerleVerdict {
    bool is_merle = false;
    std::string failure;                  // first failing condition, human-readable
    std::vector<Integer> generators;      // C_0..C_h when is_merle
    std::vector<Integer> height_sums;     // H_0..H_h
    std::vector<Rational> candidates;     // C_0..C_h as exact rationals
    std::vector<MerleCondition> conditions;
};

MerleVerdict merle_test(const CanonicalDiagram& diagram);

}  // namespace branchcheck
