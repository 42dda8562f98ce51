#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relbr/corestriction.hpp"
#include "relbr/torsor.hpp"

namespace relbr {

// One user-asserted generator: a rational point (odd-degree curves) or a
// divisor given by x-coordinate data (any degree).
struct GeneratorInput {
    std::string label;
    bool is_point = false;
    EllipticPoint point;
    DivisorSpec divisor;
};

struct ProblemSpec {
    std::string name;
    Poly curve;
    Poly ell;
    bool has_n = false;
    int n = 0;
    bool br0_x_trivial = false;  // user-asserted hypothesis, even case
    std::vector<GeneratorInput> generators;
};

struct GeneratorResult {
    std::string label;
    BrauerClass2 cls;
    SymbolChain chain;
};

struct RelBrReport {
    std::string name;
    int degree = 0;
    Rat norm_ell;
    std::optional<int> n_used;
    std::vector<GeneratorResult> per_generator;
    std::vector<BrauerClass2> br0_basis;     // reduced basis of the span
    int br0_order = 1;
    std::vector<BrauerClass2> br0_elements;  // the full span, sorted

    // odd degree only
    std::optional<BrauerClass2> conic;
    std::optional<bool> period_equals_index;
    std::vector<BrauerClass2> br_elements;   // span together with conic coset
    std::optional<int> br_order;

    // even degree only: kernel of (c_1..c_k) -> sum c_i * class(D_i) in
    // reduced echelon form, i.e. which combinations of the given generators
    // are represented by rational divisors on the torsor
    std::vector<std::vector<int>> kernel_basis;
    std::string represented_iff;
    std::string scope_note;
};

// JSON problem file: {"name"?, "curve": [c0,c1,...], "ell": [...], "n"?,
// "assertions"?: {"br0_X_trivial": bool}, "generators": [...]} with rationals
// as integers or "p/q" strings and polynomials lowest degree first.
// A generator is {"label"?, "point": ["x","y"] | "infinity"} or
// {"label"?, "divisor": [{"mult"?, "monic": [...] | "weierstrass": "x0" |
// "infinity": true}, ...]}.
ProblemSpec problem_from_json(const std::string& text);

RelBrReport relbr_elliptic(const ProblemSpec& spec);
RelBrReport relbr_even(const ProblemSpec& spec);
// dispatch on curve degree parity
RelBrReport relbr_auto(const ProblemSpec& spec);

std::string report_to_json(const RelBrReport& rep);

// helpers shared with the CLI
std::vector<std::string> class_to_strings(const BrauerClass2& c);
std::string rat_str(const Rat& r);

}  // namespace relbr
