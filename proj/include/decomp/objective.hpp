#pragma once

#include <string>

#include "decomp/rational.hpp"

namespace decomp {

// Objective over a k-decomposition (parts indexed 0..k-1):
//   CliqueSum  sum of clique numbers over all parts
//   MixedSum   chromatic number on parts 0..m-1, clique number on parts m..k-1
//   ConvexSum  sum over parts of (1-c)*omega + c*chi for a rational c in [0,1]
//
// MixedSum with m = 0 evaluates identically to CliqueSum; it still carries the
// asymmetric part-symmetry structure of its kind.  MixedSum and ConvexSum are
// defined only for graphs (r = 2).
struct ObjectiveSpec {
    enum class Kind { CliqueSum, MixedSum, ConvexSum };

    Kind kind = Kind::CliqueSum;
    int m = 0;             // MixedSum only
    Rational coeff{0};     // ConvexSum only

    static ObjectiveSpec clique_sum() { return {}; }
    static ObjectiveSpec mixed_sum(int m) { return {Kind::MixedSum, m, Rational(0)}; }
    static ObjectiveSpec convex_sum(const Rational& c) {
        return {Kind::ConvexSum, 0, c};
    }

    // Throws std::invalid_argument when the objective cannot be evaluated on a
    // decomposition with the given uniformity and part count.
    void validate_for(int r, int k) const;

    bool needs_chi(int part) const {
        switch (kind) {
            case Kind::CliqueSum: return false;
            case Kind::MixedSum: return part < m;
            case Kind::ConvexSum: return coeff.numerator() != 0;
        }
        return false;
    }

    // All integer arithmetic in the search runs scaled by this factor.
    long long scale() const {
        return kind == Kind::ConvexSum ? coeff.denominator() : 1;
    }

    // Scaled contribution of one part given its clique and chromatic numbers.
    long long part_value(int part, long long omega, long long chi) const {
        switch (kind) {
            case Kind::CliqueSum: return omega;
            case Kind::MixedSum: return part < m ? chi : omega;
            case Kind::ConvexSum:
                return (coeff.denominator() - coeff.numerator()) * omega +
                       coeff.numerator() * chi;
        }
        return 0;
    }

    // Part labels are interchangeable only inside a block; blocks are
    // {0..m-1} and {m..k-1} for MixedSum, a single block otherwise.
    int block_start(int color) const {
        if (kind == Kind::MixedSum && color >= m) return m;
        return 0;
    }

    // "omega", "chi_m:M", or "a_r:P/Q"; mirrored by parse().
    std::string to_string() const;
    static ObjectiveSpec parse(const std::string& text);

    bool operator==(const ObjectiveSpec&) const = default;
};

}  // namespace decomp
