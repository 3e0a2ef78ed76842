#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "decomp/decomposition.hpp"
#include "decomp/hypergraph.hpp"
#include "decomp/objective.hpp"
#include "decomp/rational.hpp"

namespace decomp {

// Convention for degenerate cases, used consistently everywhere:
//   - any vertex set with fewer than r vertices spans no edge and counts as a
//     clique, so omega(G) >= min(n, r-1); the empty graph on n >= 1 vertices
//     has omega = min(n, r-1) and chi = 1
//   - the order-0 graph has omega = chi = 0

struct CliqueWitness {
    std::vector<int> vertices;  // sorted
};

struct ColoringWitness {
    std::vector<int> labels;  // one label per vertex, values in {0..chi-1}
};

struct CliqueResult {
    int value = 0;
    CliqueWitness witness;
};

struct ColoringResult {
    int value = 0;
    ColoringWitness witness;
    int clique_lower_bound = 0;
    // True when an exhaustive search with value-1 colors was run and failed;
    // when false, minimality is certified by value == clique_lower_bound.
    bool exhausted_below = false;
};

// Exact clique number.  Graphs use Bron-Kerbosch with pivoting; r >= 3 uses
// branch and bound over vertex subsets with degree pruning.  Requires n <= 64.
CliqueResult clique_number(const Hypergraph& g);

// Exact chromatic number via iterative deepening with a DSATUR-style
// branch-and-bound decision search.  Graphs only (r = 2).
ColoringResult chromatic_number(const Hypergraph& g);

// Decision form of the search above: is there a proper coloring with at most
// `colors` colors?  Exposed so callers can re-check infeasibility at chi - 1.
bool colorable_with(const Hypergraph& g, int colors);

// Witness checks walk the raw edge bit set and share nothing with the solvers.
bool verify_clique_witness(const Hypergraph& g, const CliqueWitness& w, int claimed);
bool verify_coloring_witness(const Hypergraph& g, const ColoringWitness& w, int claimed);

// Objective value of a decomposition, exact.
Rational evaluate(const Decomposition& d, const ObjectiveSpec& obj);

// Per-part clique numbers, and chromatic numbers where the objective needs
// them (-1 otherwise).  Same solver path as evaluate.
struct PartValues {
    std::vector<int> omega;
    std::vector<int> chi;
};
PartValues part_values(const Decomposition& d, const ObjectiveSpec& obj);

// ---------------------------------------------------------------------------
// Bound catalog.  Each claim has a closed-form right-hand side in n, k and the
// extra parameters below; see the claim table in the README for the catalog.

enum class ClaimId { Thm1, Eq1, Thm2, Conj3, Conj7, Cor8, Cor9, Thm5, Thm11, Thm13 };

struct BoundParams {
    int k = 1;
    int n = 1;
    int r = 2;              // uniformity (Thm13)
    int m = 0;              // mixed objectives (Conj7, Thm5)
    Rational coeff{0};      // convex coefficient (Eq1, Thm11)
    std::optional<Rational> f_m;  // assumed chi-sum slack at m parts (Thm5)
};

// A claim whose stated hypotheses exclude the given parameters; reported
// distinctly from computation errors.
class HypothesisError : public std::domain_error {
public:
    explicit HypothesisError(const std::string& what) : std::domain_error(what) {}
};

Rational bound_rhs(ClaimId id, const BoundParams& p);

// The objective whose optimum the claim bounds.
ObjectiveSpec claim_objective(ClaimId id, const BoundParams& p);

// True when the claim asserts equality once n is at least this threshold.
std::optional<long long> equality_threshold(ClaimId id, const BoundParams& p);

const char* claim_name(ClaimId id);

// Preset slack function for Thm5-style bounds: f(0) = f(1) = 0, f(3) = 3,
// otherwise m!/2.
Rational preset_f(int m);

}  // namespace decomp
