#include "divtop/verify.hpp"

#include <doctest.h>

using namespace divtop;

namespace {

std::string render(const std::vector<SweepResult>& results) {
    std::string out;
    for (const auto& r : results) {
        out += r.summary() + "\n";
        for (const auto& f : r.failures) out += "  " + f + "\n";
    }
    return out;
}

std::vector<SweepResult> run_all(const SieveTable& t, const WeightCounters& c,
                                 const SummatoryTables& s, const SweepOptions& opt) {
    return {sweep_homology(t, c, opt),    sweep_shifted(t, opt),
            sweep_euler(t, c, s, opt),    sweep_inversion(t, s, opt),
            sweep_sigma_lemmas(c, opt),   sweep_shadow(c, opt),
            sweep_multicomplex(t, c, opt)};
}

}  // namespace

TEST_CASE("all sweeps pass at small scale") {
    const SieveTable t = build_sieve(300);
    const WeightCounters c(t, 300);
    const SummatoryTables s = build_summatory(t, 300);
    SweepOptions opt;
    opt.max_n = 300;
    for (const auto& r : run_all(t, c, s, opt)) {
        INFO(r.summary());
        CHECK(r.ok());
        CHECK(r.failures.empty());
    }
}

TEST_CASE("serial and parallel sweeps agree and are deterministic") {
    const SieveTable t = build_sieve(250);
    const WeightCounters c(t, 250);
    const SummatoryTables s = build_summatory(t, 250);
    SweepOptions serial;
    serial.max_n = 250;
    serial.threads = 1;
    SweepOptions parallel = serial;
    parallel.threads = 2;

    const std::string a = render(run_all(t, c, s, serial));
    const std::string b = render(run_all(t, c, s, parallel));
    const std::string b2 = render(run_all(t, c, s, parallel));
    CHECK(a == b);
    CHECK(b == b2);
}

TEST_CASE("vacuous sweep passes") {
    const SieveTable t = build_sieve(10);
    const WeightCounters c(t, 10);
    const SummatoryTables s = build_summatory(t, 10);
    SweepOptions opt;
    opt.max_n = 0;
    CHECK(sweep_euler(t, c, s, opt).ok());
    CHECK(sweep_homology(t, c, opt).ok());
    CHECK(sweep_homology(t, c, opt).checked == 0);
}
