// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is exact except the two asymptotic tolerances,
// which are pinned engineering margins around the leading terms.
//
//   1 oracle equivalence of all three Betti paths, n <= 2000, zero torsion
//   2 Euler identities for both complexes, n <= 10^6
//   3 Mobius-inversion pair reconstructions, n <= 10^6
//   4 parity/halving counter identities, x <= 10^6, all k
//   5 shadow inequalities (n <= 10^5) and f/beta relations (n <= 5000)
//   6 multicomplex homology vs the wedge formula, n <= 500
//   7 dim and modal face dimension of the complex at n = 10^7
//   8 asymptotic convergence of total Betti sums at n = 10^6
//   9 byte-identical verify reports across runs (via the CLI)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "divtop/asymptotics.hpp"
#include "divtop/betti.hpp"
#include "divtop/complex.hpp"
#include "divtop/counters.hpp"
#include "divtop/sieve.hpp"
#include "divtop/verify.hpp"

using namespace divtop;

namespace {

struct Fixture {
    SieveTable table;
    WeightCounters counters;
    SummatoryTables summ;
};

const Fixture& fixture() {
    static const Fixture f = [] {
        Fixture x;
        x.table = build_sieve(1'000'000);
        x.counters = WeightCounters(x.table, 1'000'000);
        x.summ = build_summatory(x.table, 1'000'000);
        return x;
    }();
    return f;
}

std::string cli_path;  // for criterion 9

struct Outcome {
    bool ok = false;
    std::string detail;
};

Outcome from_sweep(const SweepResult& r) {
    Outcome o;
    o.ok = r.ok();
    std::ostringstream out;
    out << "checked " << r.checked << " values, violations " << r.violations;
    if (!r.failures.empty()) out << "; first: " << r.failures.front();
    o.detail = out.str();
    return o;
}

Outcome criterion1() {
    const auto& f = fixture();
    SweepOptions opt;
    opt.max_n = 2000;
    return from_sweep(sweep_homology(f.table, f.counters, opt));
}

Outcome criterion2() {
    const auto& f = fixture();
    SweepOptions opt;
    opt.max_n = 1'000'000;
    return from_sweep(sweep_euler(f.table, f.counters, f.summ, opt));
}

Outcome criterion3() {
    const auto& f = fixture();
    SweepOptions opt;
    opt.max_n = 1'000'000;
    return from_sweep(sweep_inversion(f.table, f.summ, opt));
}

Outcome criterion4() {
    const auto& f = fixture();
    SweepOptions opt;
    opt.max_n = 1'000'000;
    return from_sweep(sweep_sigma_lemmas(f.counters, opt));
}

Outcome criterion5() {
    const auto& f = fixture();
    SweepOptions opt;
    opt.max_n = 100'000;  // f/beta relations capped at 5000 inside the sweep
    return from_sweep(sweep_shadow(f.counters, opt));
}

Outcome criterion6() {
    const auto& f = fixture();
    SweepOptions opt;
    opt.max_n = 500;
    return from_sweep(sweep_multicomplex(f.table, f.counters, opt));
}

Outcome criterion7() {
    Outcome o;
    const int dim = primorial_dim(uint64_t{10'000'000});
    const auto table = std::make_unique<SieveTable>(build_sieve(10'000'000));
    const int modal = modal_face_dimension(10'000'000, *table);
    o.ok = dim == 7 && modal == 2;
    std::ostringstream out;
    out << "dim = " << dim << " (want 7), modal face dimension = " << modal
        << " (want 2)";
    o.detail = out.str();
    return o;
}

Outcome criterion8() {
    const auto& f = fixture();
    const std::vector<uint64_t> ns{1000, 1'000'000};
    const auto total = report_total_betti_delta(ns, f.counters);
    const auto total_tilde = report_total_betti_delta_tilde(ns, f.table, f.counters);

    const double rel_delta = std::abs(total[1].ratio - 1.0);
    const double rel_tilde = std::abs(total_tilde[1].ratio - 1.0);
    const auto dev = [](const ConvergenceRow& r) {
        return std::abs(static_cast<double>(r.measured) - r.predicted) / r.n;
    };
    const bool shrink_delta = dev(total[1]) < dev(total[0]);
    const bool shrink_tilde = dev(total_tilde[1]) < dev(total_tilde[0]);

    Outcome o;
    o.ok = rel_delta < 0.01 && rel_tilde < 0.02 && shrink_delta && shrink_tilde;
    std::ostringstream out;
    out << "|ratio-1| at 10^6: " << rel_delta << " (< 0.01), cell complex " << rel_tilde
        << " (< 0.02); deviation shrink 10^3 -> 10^6: " << (shrink_delta ? "yes" : "NO")
        << "/" << (shrink_tilde ? "yes" : "NO");
    o.detail = out.str();
    return o;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Outcome criterion9() {
    Outcome o;
    if (cli_path.empty()) {
        const char* env = std::getenv("DIVTOP_CLI");
        if (env) cli_path = env;
    }
    if (cli_path.empty()) {
        o.detail = "no CLI path given (use --cli or DIVTOP_CLI)";
        return o;
    }
    const std::string r1 = "acceptance_report_1.txt";
    const std::string r2 = "acceptance_report_2.txt";
    const std::string base =
        cli_path + " verify --suite all --max-n 2000 --output ";
    const int s1 = std::system((base + r1 + " > /dev/null 2>&1").c_str());
    const int s2 = std::system((base + r2 + " > /dev/null 2>&1").c_str());
    const std::string a = slurp(r1), b = slurp(r2);
    std::remove(r1.c_str());
    std::remove(r2.c_str());
    o.ok = WEXITSTATUS(s1) == 0 && WEXITSTATUS(s2) == 0 && !a.empty() && a == b;
    std::ostringstream out;
    out << "exit codes " << WEXITSTATUS(s1) << "/" << WEXITSTATUS(s2) << ", reports "
        << (a == b ? "byte-identical" : "DIFFER") << " (" << a.size() << " bytes)";
    o.detail = out.str();
    return o;
}

const char* kDescriptions[9] = {
    "oracle equivalence (formula = shifted count = integer homology, no torsion)",
    "Euler identities M(n) and L(n) vs alternating Betti sums",
    "Mobius-inversion pair reconstructions",
    "counter parity/halving identities",
    "shadow inequalities and f/beta relations",
    "multicomplex homology vs wedge formula",
    "dim and modal face dimension at n = 10^7",
    "asymptotic convergence of total Betti sums",
    "byte-identical verify reports",
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; i++) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else if (arg == "--cli" && i + 1 < argc)
            cli_path = argv[++i];
    }

    const std::function<Outcome()> criteria[9] = {
        criterion1, criterion2, criterion3, criterion4, criterion5,
        criterion6, criterion7, criterion8, criterion9};

    bool all_ok = true;
    for (int i = 1; i <= 9; i++) {
        if (only && i != only) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i - 1]();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d: %s - %s - %s (%.1f s)\n", i, o.ok ? "PASS" : "FAIL",
                    kDescriptions[i - 1], o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.ok) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
