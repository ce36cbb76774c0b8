// Timing harness for the enumeration kernels: exhaustive interdiction search
// and exhaustive submodular minimization, OpenMP kernel vs serial reference.
#include <chrono>
#include <cstdio>

#include "mstint/io.hpp"
#include "mstint/pareto.hpp"
#include "mstint/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mstint;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int m = argc > 1 ? std::atoi(argv[1]) : 20;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif

    GeneratorParams params;
    params.vertex_count = 8;
    params.edge_count = m;
    params.max_weight = 8;
    params.max_cost = 5;
    params.budget_den = 7;
    // First seed that survives preprocessing, so both kernels have work.
    Instance raw = generate(params);
    for (params.seed = 2024; params.seed < 3000; ++params.seed) {
        raw = generate(params);
        auto [rounded, cert] = round_weights(raw);
        if (std::holds_alternative<Prepared>(prepare(rounded))) break;
    }
    std::printf("instance: seed=%llu n=%d m=%d B=%lld\n",
                static_cast<unsigned long long>(params.seed), raw.vertex_count(),
                raw.edge_count(), static_cast<long long>(raw.budget()));

    // The oracle needs no preprocessing; a half-total budget keeps the cost
    // pruning from trivializing the search space.
    int64_t total_cost = cost_sum(raw, raw.interdictable_edges());
    Instance stress(raw.vertex_count(), raw.edges(), std::max<int64_t>(1, total_cost / 2));

    auto t0 = Clock::now();
    ExactResult ser = exact_opt_serial(stress, m);
    double serial_time = seconds_since(t0);
    t0 = Clock::now();
    ExactResult par = exact_opt(stress, m);
    double parallel_time = seconds_since(t0);
    std::printf("exact_opt      serial %.3fs  parallel %.3fs  speedup %.2fx  (value %lld%s)\n",
                serial_time, parallel_time, serial_time / parallel_time,
                static_cast<long long>(par.value), par.value == ser.value ? "" : " MISMATCH");

    auto [rounded, cert] = round_weights(raw);
    PrepareResult prep = prepare(rounded);
    if (auto* ready = std::get_if<Prepared>(&prep)) {
        SubmodularObjective f(ready->dec);
        std::printf("sfm ground set: %d\n", f.size());
        Rational lambda(3, 2);
        t0 = Clock::now();
        SfmResult a = sfm_min(f, lambda, SfmBackend::exhaustive_serial);
        double sfm_serial = seconds_since(t0);
        t0 = Clock::now();
        SfmResult b = sfm_min(f, lambda, SfmBackend::exhaustive);
        double sfm_parallel = seconds_since(t0);
        std::printf("sfm exhaustive serial %.3fs  parallel %.3fs  speedup %.2fx  (value %lld%s)\n",
                    sfm_serial, sfm_parallel, sfm_serial / sfm_parallel,
                    static_cast<long long>(b.scaled_value),
                    a.scaled_value == b.scaled_value ? "" : " MISMATCH");
    } else {
        std::printf("sfm benchmark skipped (instance not solvable as generated)\n");
    }
    return 0;
}
