#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <naive.hpp>

#include "decomp/invariants.hpp"
#include "decomp/objective.hpp"
#include "decomp/search.hpp"

namespace {

struct Instance {
    int n;
    int r;
    int k;
    const char* objective;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int parallel_threads() {
#ifdef _OPENMP
    return std::max(2, omp_get_max_threads());
#else
    return 4;
#endif
}

}  // namespace

int main(int argc, char** argv) {
    // Optional substring filter over the instance column.
    std::string filter = argc > 1 ? argv[1] : "";

    const std::vector<Instance> instances = {
        {6, 2, 2, "omega"},    {6, 2, 2, "chi_m:2"},  {5, 2, 3, "omega"},
        {5, 2, 3, "chi_m:1"},  {5, 2, 3, "a_r:1/2"},  {5, 2, 4, "omega"},
        {6, 3, 2, "omega"},    {5, 3, 3, "omega"},
    };

    const int par = parallel_threads();
    std::cout << "exact optimum: naive enumeration vs serial vs " << par
              << "-thread branch and bound\n\n";
    std::cout << std::left << std::setw(22) << "instance" << std::right << std::setw(9)
              << "optimum" << std::setw(12) << "naive_s" << std::setw(12) << "serial_s"
              << std::setw(12) << "par_s" << std::setw(10) << "speedup" << "\n";

    int mismatches = 0;
    for (const auto& inst : instances) {
        std::string label = "n=" + std::to_string(inst.n) + ",r=" + std::to_string(inst.r) +
                            ",k=" + std::to_string(inst.k) + "," + inst.objective;
        if (!filter.empty() && label.find(filter) == std::string::npos) continue;

        decomp::ObjectiveSpec obj = decomp::ObjectiveSpec::parse(inst.objective);

        auto t0 = std::chrono::steady_clock::now();
        decomp::reference::BruteOptimum brute =
            decomp::reference::optimum_brute(inst.n, inst.r, inst.k, obj);
        double naive_s = seconds_since(t0);

        decomp::SearchOptions serial_opts;
        serial_opts.threads = 1;
        t0 = std::chrono::steady_clock::now();
        decomp::SearchReport serial = decomp::optimize(inst.n, inst.r, inst.k, obj, serial_opts);
        double serial_s = seconds_since(t0);

        decomp::SearchOptions par_opts;
        par_opts.threads = par;
        t0 = std::chrono::steady_clock::now();
        decomp::SearchReport parallel = decomp::optimize(inst.n, inst.r, inst.k, obj, par_opts);
        double par_s = seconds_since(t0);

        bool ok = serial.exact && parallel.exact && serial.optimum == brute.optimum &&
                  parallel.optimum == brute.optimum;
        if (!ok) ++mismatches;

        std::cout << std::left << std::setw(22) << label << std::right << std::setw(9)
                  << decomp::to_string(serial.optimum) << std::setw(12) << std::fixed
                  << std::setprecision(4) << naive_s << std::setw(12) << serial_s
                  << std::setw(12) << par_s << std::setw(10) << std::setprecision(2)
                  << (par_s > 0 ? serial_s / par_s : 0.0)
                  << (ok ? "" : "  MISMATCH") << "\n";
    }

    if (mismatches > 0) {
        std::cout << "\n" << mismatches << " instance(s) disagreed across kernels\n";
        return 1;
    }
    std::cout << "\nall kernels agree on every instance\n";
    return 0;
}
