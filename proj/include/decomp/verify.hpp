#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decomp/decomposition.hpp"
#include "decomp/invariants.hpp"
#include "decomp/objective.hpp"
#include "decomp/rational.hpp"
#include "decomp/search.hpp"

namespace decomp {

enum class Status { Holds, Equality, Violated, HypothesisNotMet, Inconclusive };

// "holds", "equality", "VIOLATED", "hypothesis-not-met", "inconclusive"
const char* status_name(Status s);

// One checked instance of a claim.  lhs is absent exactly when the search was
// inconclusive; status is Violated iff lhs > rhs and Equality iff lhs == rhs.
struct VerificationRecord {
    std::string claim;
    int k = 0;
    int n = 0;
    int r = 2;
    int m = 0;
    Rational coeff{0};
    std::optional<Rational> lhs;
    Rational rhs{0};
    Status status = Status::Holds;
    std::string witness;  // file name of the witness decomposition, may be empty
};

// Parsed "k=2..3,n=1..6"; a bare "k=3" names a singleton range.
struct RangeSpec {
    int k_lo = 2, k_hi = 2;
    int n_lo = 1, n_hi = 5;
};
RangeSpec parse_range(const std::string& text);

struct SuiteOptions {
    long long node_budget = 100'000'000;
    int threads = 1;
    int m = -1;                     // claim parameter; -1 takes the claim default
    int r = 2;                      // uniformity, used by thm13
    std::optional<Rational> coeff;  // eq1 / thm11 coefficient override
    std::optional<Rational> f_m;    // thm5 slack override, else preset_f(m)
    int draws = 1000;               // random draws per thm11-avg instance
};

struct SuiteResult {
    std::vector<VerificationRecord> records;
    // witness name -> decomposition, for file output and for the audit
    std::vector<std::pair<std::string, Decomposition>> witnesses;
    std::vector<std::string> notes;
    int construction_failures = 0;  // construction value missed an asserted-equality rhs
    int equality_misses = 0;        // asserted equality not attained by the optimum
    int linkage_failures = 0;       // conj3-at-m verified but some conj7(m) record failed
    long long trace_runs = 0;
    long long trace_skips = 0;
    long long trace_step_failures = 0;

    // 1 when violated, else 2 when inconclusive, else 0
    int exit_code() const;
};

// Runs one claim suite over the range.  Claim names: thm1, eq1, thm2, conj3,
// conj7, cor8, cor9, cor10, thm5, thm5-trace, thm11, thm11-avg, thm13.
// A Violated record halts the suite at that instance.
SuiteResult run_claim(const std::string& claim, const RangeSpec& range,
                      const SuiteOptions& opts);

// Every claim over the default desk-scale ranges, in a fixed order, plus the
// conj3/conj7 linkage cross-check on the collected records.
SuiteResult run_all(const SuiteOptions& opts);

// ---------------------------------------------------------------------------
// Proof-chain checks on a single decomposition.

struct TraceStep {
    std::string name;
    Rational lhs{0};
    Rational rhs{0};
    bool is_identity = false;  // checked as lhs == rhs, otherwise lhs <= rhs
    bool holds = false;
};

struct TraceReport {
    bool precondition_ok = false;  // donor positive parts complete
    std::vector<TraceStep> steps;
    bool all_hold = false;
};

// Steps through the mixed-bound derivation on d: the chi-group remainder
// bound, the per-part pocket bounds on X, subadditivity, the omega-side
// reconciliation and capacity count, the assembly identity, and the final
// bound with slack f_m.  Chi steps require r = 2; m = 0 degenerates to the
// pure clique-sum chain and works for any uniformity.
TraceReport verify_thm5_trace(const Decomposition& d, int m, const Rational& f_m);

struct AveragingReport {
    Rational triple_sum{0};    // sum of evaluate over all C(k,3) chi-triples
    Rational identity_rhs{0};  // C(k-1,2)*sum(chi) + C(k-1,3)*sum(omega)
    Rational a_lhs{0};         // ((k-3)*sum(omega) + 3*sum(chi)) / k
    Rational a_rhs{0};         // n + C(k,2)
    bool identity_holds = false;
    bool inequality_holds = false;
    bool monotonic_holds = false;  // A_s <= A_{3/k} for sampled s below 3/k
    bool ok() const { return identity_holds && inequality_holds && monotonic_holds; }
};

// The averaging argument on one decomposition; requires r = 2 and k > 3.
AveragingReport verify_thm11_averaging(const Decomposition& d);

struct LemmaReproduction {
    int arrangements = 0;
    std::vector<Decomposition> failures;
    bool ok() const { return failures.empty(); }
};

// Front-loads a maximum-size part across the optimal set and checks donor
// completeness on every arrangement attaining the maximum.  For MixedSum the
// front slot and the maximum range over the chi block only.
LemmaReproduction check_lemma_reproduction(const std::vector<Decomposition>& optima,
                                           const ObjectiveSpec& obj);

// ---------------------------------------------------------------------------
// Reports.

std::string records_to_csv(const std::vector<VerificationRecord>& records);
std::string records_to_json(const std::vector<VerificationRecord>& records);

// Re-derives each record's lhs from its witness decomposition alone and
// returns the number of mismatches.  Records without a witness are skipped.
int audit_witnesses(const SuiteResult& result);

// records.csv, records.json, and one JSON file per witness, under dir.
void write_reports(const SuiteResult& result, const std::string& dir);

}  // namespace decomp
