// Timings of the OpenMP kernels against their serial reference paths:
// segmented sieve construction, the Euler-identity sweep, and the homology
// oracle sweep.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "divtop/counters.hpp"
#include "divtop/sieve.hpp"
#include "divtop/verify.hpp"

using namespace divtop;

namespace {

template <typename F>
double time_ms(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, int threads) {
    std::printf("%-24s serial %10.1f ms   %d threads %10.1f ms   speedup %.2fx\n", name,
                serial_ms, threads, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel timings"};
    uint64_t sieve_limit = 10'000'000;
    uint64_t sweep_n = 200'000;
    uint64_t homology_n = 600;
    int threads = omp_get_max_threads();
    app.add_option("--sieve-limit", sieve_limit, "sieve build size");
    app.add_option("--sweep-n", sweep_n, "Euler sweep bound");
    app.add_option("--homology-n", homology_n, "homology sweep bound");
    app.add_option("--threads", threads, "parallel thread count");
    CLI11_PARSE(app, argc, argv);

    std::printf("kernels at sieve limit %llu, sweep bound %llu, homology bound %llu\n\n",
                (unsigned long long)sieve_limit, (unsigned long long)sweep_n,
                (unsigned long long)homology_n);

    SieveConfig serial_cfg;
    serial_cfg.threads = 1;
    SieveConfig par_cfg;
    par_cfg.threads = threads;
    const double sieve_serial = time_ms([&] { build_sieve(sieve_limit, serial_cfg); });
    const double sieve_par = time_ms([&] { build_sieve(sieve_limit, par_cfg); });
    report("sieve build", sieve_serial, sieve_par, threads);

    const SieveTable table = build_sieve(std::max(sieve_limit, sweep_n), par_cfg);
    const WeightCounters counters(table, sweep_n);
    const SummatoryTables summ = build_summatory(table, sweep_n);

    SweepOptions opt;
    opt.max_n = sweep_n;
    opt.threads = 1;
    SweepOptions popt = opt;
    popt.threads = threads;
    const double euler_serial =
        time_ms([&] { sweep_euler(table, counters, summ, opt); });
    const double euler_par = time_ms([&] { sweep_euler(table, counters, summ, popt); });
    report("euler sweep", euler_serial, euler_par, threads);

    opt.max_n = popt.max_n = homology_n;
    const double hom_serial = time_ms([&] { sweep_homology(table, counters, opt); });
    const double hom_par = time_ms([&] { sweep_homology(table, counters, popt); });
    report("homology sweep", hom_serial, hom_par, threads);

    return 0;
}
