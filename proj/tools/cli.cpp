#include <cstdlib>
#include <cstring>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "decomp/constructions.hpp"
#include "decomp/invariants.hpp"
#include "decomp/json_io.hpp"
#include "decomp/objective.hpp"
#include "decomp/search.hpp"
#include "decomp/verify.hpp"

namespace {

constexpr long long kDefaultBudget = 100'000'000;

// Flag wins over the environment, the environment over the default.
long long resolve_budget(const std::optional<long long>& flag, bool& env_bad) {
    if (flag) return *flag;
    const char* env = std::getenv("DECOMP_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultBudget;
    try {
        std::size_t used = 0;
        long long v = std::stoll(env, &used);
        if (used != std::strlen(env) || v <= 0) {
            env_bad = true;
            return kDefaultBudget;
        }
        return v;
    } catch (const std::exception&) {
        env_bad = true;
        return kDefaultBudget;
    }
}

int run_construct(int k, int r, int n, const std::string& out, bool explicit_form) {
    decomp::Decomposition d = decomp::construct_extremal(k, r, n);
    nlohmann::json j = explicit_form ? decomp::decomposition_to_explicit_json(d)
                                     : decomp::decomposition_to_json(d);
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& lv : decomp::label_table(k, r)) {
        nlohmann::json row;
        row["index"] = lv.index;
        row["i"] = lv.i;
        row["j"] = lv.j;
        row["copy"] = lv.copy;
        labels.push_back(std::move(row));
    }
    j["labels"] = std::move(labels);
    j["base_order"] = decomp::base_order(k, r);
    decomp::write_text_file(out, j.dump(2) + "\n");
    std::cout << "wrote " << out << " (k=" << k << ", r=" << r << ", n=" << n
              << ", base order " << decomp::base_order(k, r) << ")\n";
    return 0;
}

int run_optimize(int n, int r, int k, const std::string& objective, int threads,
                 long long budget, bool all_optima, const std::string& out) {
    decomp::ObjectiveSpec obj = decomp::ObjectiveSpec::parse(objective);
    decomp::SearchOptions sopts;
    sopts.threads = threads;
    sopts.node_budget = budget;
    sopts.all_optima = all_optima;
    decomp::SearchReport rep = decomp::optimize(n, r, k, obj, sopts);

    nlohmann::json j;
    j["n"] = n;
    j["r"] = r;
    j["k"] = k;
    j["objective"] = obj.to_string();
    j["optimum"] = decomp::to_string(rep.optimum);
    j["exact"] = rep.exact;
    j["budget"] = budget;
    j["all_optima"] = all_optima;
    j["optima_truncated"] = rep.optima_truncated;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : rep.optima)
        arr.push_back(std::vector<int>(d.colors().begin(), d.colors().end()));
    j["optima"] = std::move(arr);
    decomp::write_text_file(out, j.dump(2) + "\n");

    std::cout << "optimum " << decomp::to_string(rep.optimum)
              << (rep.exact ? "" : " (budget exhausted, lower bound only)") << ", "
              << rep.optima.size() << (rep.optima_truncated ? "+" : "")
              << " optimal classes, nodes " << rep.nodes_visited << ", "
              << rep.elapsed_seconds << "s\n";
    std::cout << "wrote " << out << "\n";
    return rep.exact ? 0 : 2;
}

int run_verify(const std::string& claim, const std::string& range_text,
               const std::string& out_dir, int threads, long long budget, int m,
               const std::string& coeff_text, const std::string& f_text, int draws,
               int r_flag) {
    decomp::SuiteOptions sopts;
    sopts.threads = threads;
    sopts.node_budget = budget;
    sopts.m = m;
    sopts.draws = draws;
    sopts.r = r_flag > 0 ? r_flag : (claim == "thm13" ? 3 : 2);
    if (!coeff_text.empty()) sopts.coeff = decomp::parse_rational(coeff_text);
    if (!f_text.empty()) sopts.f_m = decomp::parse_rational(f_text);

    decomp::SuiteResult res = claim == "all"
                                  ? decomp::run_all(sopts)
                                  : decomp::run_claim(claim, decomp::parse_range(range_text), sopts);

    for (const auto& note : res.notes) std::cout << "note: " << note << "\n";
    std::cout << decomp::records_to_csv(res.records);
    if (!out_dir.empty()) {
        decomp::write_reports(res, out_dir);
        std::cout << "reports written to " << out_dir << "\n";
    }

    int holds = 0, equal = 0, violated = 0, skipped = 0, open = 0;
    for (const auto& rec : res.records) {
        switch (rec.status) {
            case decomp::Status::Holds: ++holds; break;
            case decomp::Status::Equality: ++equal; break;
            case decomp::Status::Violated: ++violated; break;
            case decomp::Status::HypothesisNotMet: ++skipped; break;
            case decomp::Status::Inconclusive: ++open; break;
        }
    }
    std::cout << "summary: " << holds << " holds, " << equal << " equality, " << violated
              << " violated, " << skipped << " hypothesis-not-met, " << open
              << " inconclusive";
    if (res.trace_runs + res.trace_skips > 0)
        std::cout << "; traces " << res.trace_runs << " run / " << res.trace_skips
                  << " skipped, " << res.trace_step_failures << " step failures";
    std::cout << "\n";
    return res.exit_code();
}

int run_eval(const std::string& in, const std::string& objective, bool show_parts) {
    decomp::Decomposition d =
        decomp::decomposition_from_json(nlohmann::json::parse(decomp::read_text_file(in)));
    decomp::ObjectiveSpec obj = decomp::ObjectiveSpec::parse(objective);
    std::cout << decomp::to_string(decomp::evaluate(d, obj)) << "\n";
    if (show_parts) {
        decomp::PartValues pv = decomp::part_values(d, obj);
        for (int t = 0; t < d.parts(); ++t) {
            std::cout << "part " << t << ": size " << d.part_size(t) << ", omega "
                      << pv.omega[t];
            if (pv.chi[t] >= 0) std::cout << ", chi " << pv.chi[t];
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact laboratory for clique and chromatic number decompositions of "
                 "complete graphs and hypergraphs"};
    app.require_subcommand(1);

    int n = 0, r = 2, k = 1;
    std::string objective = "omega";
    std::string out;
    bool explicit_form = false;
    int threads = 1;
    std::optional<long long> budget_flag;
    bool all_optima = false;

    CLI::App* construct = app.add_subcommand("construct", "build the extremal decomposition");
    construct->add_option("--k", k, "number of parts")->required()->check(CLI::PositiveNumber);
    construct->add_option("--r", r, "uniformity")->check(CLI::Range(2, 32));
    construct->add_option("--n", n, "number of vertices")->required()
        ->check(CLI::NonNegativeNumber);
    construct->add_option("--out", out, "output decomposition file")->required();
    construct->add_flag("--explicit", explicit_form, "list every edge with its part");

    CLI::App* opt = app.add_subcommand("optimize", "exact optimum over all decompositions");
    opt->add_option("--n", n, "number of vertices")->required()->check(CLI::NonNegativeNumber);
    opt->add_option("--r", r, "uniformity")->check(CLI::Range(2, 32));
    opt->add_option("--k", k, "number of parts")->required()->check(CLI::PositiveNumber);
    opt->add_option("--objective", objective, "omega | chi_m:M | a_r:P/Q")->required();
    opt->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    opt->add_option("--budget", budget_flag, "node budget");
    opt->add_flag("--all-optima", all_optima, "keep every optimal class");
    opt->add_option("--out", out, "output report file")->required();

    std::string claim, range_text = "k=2..3,n=1..5", out_dir;
    int m = -1, draws = 1000, r_flag = 0;
    std::string coeff_text, f_text;

    CLI::App* verify = app.add_subcommand("verify", "run a claim verification suite");
    verify->add_option("--claim", claim, "claim name or 'all'")->required();
    verify->add_option("--range", range_text, "instance range, e.g. \"k=2..3,n=1..6\"");
    verify->add_option("--out", out_dir, "report directory");
    verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--budget", budget_flag, "node budget");
    verify->add_option("--m", m, "mixed objective parameter for conj7/thm5/thm5-trace");
    verify->add_option("--coeff", coeff_text, "convex coefficient P/Q for eq1/thm11");
    verify->add_option("--f", f_text, "slack override P/Q for thm5");
    verify->add_option("--draws", draws, "random draws per thm11-avg instance")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--r", r_flag, "uniformity for thm13");

    std::string in_file;
    bool show_parts = false;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a decomposition file");
    eval->add_option("--in", in_file, "decomposition file")->required();
    eval->add_option("--objective", objective, "omega | chi_m:M | a_r:P/Q");
    eval->add_flag("--parts", show_parts, "print per-part invariants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    bool env_bad = false;
    long long budget = resolve_budget(budget_flag, env_bad);
    if (env_bad) {
        std::cerr << "error: DECOMP_BUDGET must be a positive integer\n";
        return 3;
    }

    try {
        if (construct->parsed()) return run_construct(k, r, n, out, explicit_form);
        if (opt->parsed()) return run_optimize(n, r, k, objective, threads, budget,
                                               all_optima, out);
        if (verify->parsed()) return run_verify(claim, range_text, out_dir, threads, budget,
                                                m, coeff_text, f_text, draws, r_flag);
        if (eval->parsed()) return run_eval(in_file, objective, show_parts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
