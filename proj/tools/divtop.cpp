// divtop: command-line front end for the divisor-topology library.
//
// Subcommands: betti, verify, series, asymptotics. Exit codes: 0 success,
// 1 verification failure, 2 usage error, 3 range/resource error.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divtop/asymptotics.hpp"
#include "divtop/betti.hpp"
#include "divtop/complex.hpp"
#include "divtop/counters.hpp"
#include "divtop/format.hpp"
#include "divtop/sieve.hpp"
#include "divtop/verify.hpp"

namespace {

using namespace divtop;

struct GlobalOpts {
    uint64_t limit = 0;          // 0 = auto-size from the command arguments
    uint64_t counter_limit = 0;  // 0 = follow limit
    uint64_t face_cap = kDefaultFaceCap;
    uint64_t segment_length = 1u << 22;
    int threads = 0;
    std::string format = "table";
    std::string output;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + g.output);
    out << text;
}

SieveTable make_table(const GlobalOpts& g, uint64_t needed) {
    SieveConfig cfg;
    cfg.segment_length = g.segment_length;
    cfg.threads = g.threads;
    const uint64_t limit = g.limit ? g.limit : std::max<uint64_t>(needed, 1);
    return build_sieve(limit, cfg);
}

uint64_t counter_limit_for(const GlobalOpts& g, const SieveTable& table, uint64_t needed) {
    const uint64_t wanted = g.counter_limit ? g.counter_limit
                          : g.limit         ? g.limit
                                            : std::max<uint64_t>(needed, 1);
    return std::min(wanted, table.limit());
}

struct BettiArgs {
    uint64_t n = 0;
    std::string complex_kind = "delta";
    std::string method;  // empty = default per complex
    std::string multicomplex_file;
};

int cmd_betti(const GlobalOpts& g, const BettiArgs& a) {
    const OutputFormat fmt = parse_output_format(g.format);

    if (!a.multicomplex_file.empty()) {
        const auto mc = MulticomplexModel::from_file(a.multicomplex_file);
        const HomologyResult h = multicomplex_betti(mc, g.face_cap);
        emit(g, render_betti(h.betti, fmt));
        if (!h.torsion.empty()) std::cerr << "note: torsion present\n";
        return 0;
    }

    if (a.n == 0) throw std::invalid_argument("betti: --n is required (n >= 1)");
    std::string method = a.method;
    if (method.empty()) method = a.complex_kind == "delta" ? "formula" : "wedge";

    const bool tilde = a.complex_kind == "delta-tilde";
    if (!tilde && a.complex_kind != "delta")
        throw std::invalid_argument("betti: --complex must be delta or delta-tilde");
    if (tilde && (method == "formula" || method == "count"))
        throw std::invalid_argument("betti: method '" + method +
                                    "' applies to --complex delta only");
    if (!tilde && method == "wedge")
        throw std::invalid_argument("betti: method 'wedge' applies to delta-tilde only");

    const SieveTable table = make_table(g, a.n);
    BettiVector result;
    if (method == "formula") {
        const WeightCounters counters(table, counter_limit_for(g, table, a.n));
        result = betti_delta(a.n, counters);
    } else if (method == "count") {
        result = betti_delta_shifted_count(a.n, table);
    } else if (method == "wedge") {
        const WeightCounters counters(table, counter_limit_for(g, table, a.n));
        result = betti_delta_tilde(a.n, table, counters);
    } else if (method == "oracle") {
        if (tilde) {
            const auto mc = build_divisor_multicomplex(a.n, table);
            HomologyResult h = multicomplex_betti(mc, g.face_cap);
            result = BettiVector(a.n, BettiMethod::HomologyOracle);
            for (const auto& [k, v] : h.betti.values()) result.set(k, v);
            if (!h.torsion.empty()) std::cerr << "note: torsion present\n";
        } else {
            const auto complex = build_delta_complex(a.n, table, g.face_cap);
            HomologyResult h = homology_betti(complex);
            result = h.betti;
            if (!h.torsion.empty()) std::cerr << "note: torsion present\n";
        }
    } else {
        throw std::invalid_argument("betti: unknown method '" + method + "'");
    }
    emit(g, render_betti(result, fmt));
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    uint64_t max_n = 2000;
};

int cmd_verify(const GlobalOpts& g, const VerifyArgs& a) {
    const bool all = a.suite == "all";
    if (!all && a.suite != "homology" && a.suite != "shifted" && a.suite != "euler" &&
        a.suite != "inversion" && a.suite != "shadow")
        throw std::invalid_argument("verify: unknown suite '" + a.suite + "'");

    const SieveTable table = make_table(g, std::max<uint64_t>(a.max_n, 1));
    const WeightCounters counters(table, counter_limit_for(g, table, a.max_n));
    const SummatoryTables summ = build_summatory(table, counters.limit());

    SweepOptions opt;
    opt.max_n = std::min<uint64_t>(a.max_n, counters.limit());
    opt.threads = g.threads;
    opt.face_cap = g.face_cap;

    std::vector<SweepResult> results;
    if (all || a.suite == "homology") results.push_back(sweep_homology(table, counters, opt));
    if (all || a.suite == "shifted") results.push_back(sweep_shifted(table, opt));
    if (all || a.suite == "euler") results.push_back(sweep_euler(table, counters, summ, opt));
    if (all || a.suite == "inversion") {
        results.push_back(sweep_inversion(table, summ, opt));
        results.push_back(sweep_sigma_lemmas(counters, opt));
    }
    if (all || a.suite == "shadow") results.push_back(sweep_shadow(counters, opt));
    if (all) results.push_back(sweep_multicomplex(table, counters, opt));

    std::string report;
    bool ok = true;
    for (const auto& r : results) {
        report += r.summary() + "\n";
        for (const auto& f : r.failures) report += "  " + f + "\n";
        if (!r.ok()) ok = false;
    }
    report += std::string("overall: ") + (ok ? "PASS" : "FAIL") + "\n";
    emit(g, report);
    return ok ? 0 : 1;
}

struct SeriesArgs {
    std::string quantity = "mertens";
    std::string range = "1..100";
    uint64_t stride = 1;
    int k = 1;
};

std::pair<uint64_t, uint64_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("series: range must look like A..B");
    const uint64_t a = std::stoull(s.substr(0, dots));
    const uint64_t b = std::stoull(s.substr(dots + 2));
    return {a, b};
}

int cmd_series(const GlobalOpts& g, const SeriesArgs& a) {
    const OutputFormat fmt = parse_output_format(g.format);
    const auto [from, to] = parse_range(a.range);
    if (a.stride < 1) throw std::invalid_argument("series: stride must be >= 1");

    std::vector<SeriesRow> rows;
    if (from <= to) {
        const SieveTable table = make_table(g, to);
        if (a.quantity == "mertens" || a.quantity == "liouville") {
            const SummatoryTables summ = build_summatory(table, std::min(to, table.limit()));
            for (uint64_t n = from; n <= to; n += a.stride)
                rows.push_back({a.quantity, n,
                                a.quantity == "mertens" ? mertens(summ, n)
                                                        : liouville_summatory(summ, n)});
        } else if (a.quantity == "sigma" || a.quantity == "sigma-odd-k") {
            const WeightCounters counters(table, counter_limit_for(g, table, to));
            for (uint64_t n = from; n <= to; n += a.stride)
                rows.push_back({a.quantity, n,
                                a.quantity == "sigma"
                                    ? counters.sigma(n)
                                    : counters.sigma_k_odd(a.k, n)});
        } else {
            throw std::invalid_argument("series: unknown quantity '" + a.quantity + "'");
        }
    }
    emit(g, render_series(rows, fmt));
    return 0;
}

struct AsymptoticsArgs {
    std::string report = "total-betti-delta";
    std::vector<uint64_t> ns;
    int k = 0;
};

int cmd_asymptotics(const GlobalOpts& g, const AsymptoticsArgs& a) {
    const OutputFormat fmt = parse_output_format(g.format);
    std::vector<uint64_t> ns = a.ns;
    if (ns.empty()) ns = {1000, 10000, 100000, 1000000};
    uint64_t needed = 1;
    for (uint64_t n : ns) needed = std::max(needed, n);

    const SieveTable table = make_table(g, needed);
    std::vector<ConvergenceRow> rows;
    if (a.report == "growth-traces") {
        const SummatoryTables summ = build_summatory(table, std::min(needed, table.limit()));
        rows = report_growth_traces(ns, summ);
    } else if (a.report == "sqfree-density") {
        rows = report_sqfree_density(ns, table);
    } else {
        const WeightCounters counters(table, counter_limit_for(g, table, needed));
        if (a.report == "total-betti-delta")
            rows = report_total_betti_delta(ns, counters);
        else if (a.report == "total-betti-delta-tilde")
            rows = report_total_betti_delta_tilde(ns, table, counters);
        else if (a.report == "parity-betti-delta")
            rows = report_parity_betti(ns, ComplexKind::Delta, table, counters);
        else if (a.report == "parity-betti-delta-tilde")
            rows = report_parity_betti(ns, ComplexKind::DeltaTilde, table, counters);
        else if (a.report == "fixed-k-betti")
            rows = report_fixed_k_betti(a.k, ns, counters);
        else
            throw std::invalid_argument("asymptotics: unknown report '" + a.report + "'");
    }
    emit(g, render_rows(rows, fmt));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisor topology toolkit: Betti numbers, Euler identities and "
                 "asymptotics of the squarefree divisor complex and its cell-complex "
                 "extension"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    GlobalOpts g;
    app.add_option("--limit", g.limit, "sieve limit (default: sized from the command)")
        ->envname("DIVTOP_LIMIT");
    app.add_option("--counter-limit", g.counter_limit, "prefix-counter limit");
    app.add_option("--face-cap", g.face_cap, "max faces for explicit complexes")
        ->envname("DIVTOP_FACE_CAP");
    app.add_option("--segment-length", g.segment_length, "sieve segment length");
    app.add_option("--threads", g.threads, "worker threads (1 = serial reference path)")
        ->envname("DIVTOP_THREADS");
    app.add_option("--format", g.format, "output format: table|csv|json");
    app.add_option("--output", g.output, "write output to this file instead of stdout");

    BettiArgs betti_args;
    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of one complex");
    betti_cmd->add_option("--n", betti_args.n, "complex parameter n");
    betti_cmd->add_option("--complex", betti_args.complex_kind, "delta | delta-tilde");
    betti_cmd->add_option("--method", betti_args.method,
                          "formula | count | oracle | wedge");
    betti_cmd->add_option("--multicomplex-file", betti_args.multicomplex_file,
                          "compute homology of a multicomplex file instead");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run verification sweeps");
    verify_cmd->add_option("--suite", verify_args.suite,
                           "homology | shifted | euler | inversion | shadow | all");
    verify_cmd->add_option("--max-n", verify_args.max_n, "sweep upper bound");

    SeriesArgs series_args;
    auto* series_cmd = app.add_subcommand("series", "emit an arithmetic series");
    series_cmd->add_option("--quantity", series_args.quantity,
                           "mertens | liouville | sigma | sigma-odd-k");
    series_cmd->add_option("--range", series_args.range, "inclusive range A..B");
    series_cmd->add_option("--stride", series_args.stride, "sampling stride");
    series_cmd->add_option("--k", series_args.k, "weight for sigma-odd-k");

    AsymptoticsArgs asym_args;
    auto* asym_cmd = app.add_subcommand("asymptotics", "convergence report tables");
    asym_cmd->add_option("--report", asym_args.report,
                         "total-betti-delta | total-betti-delta-tilde | "
                         "parity-betti-delta | parity-betti-delta-tilde | "
                         "fixed-k-betti | growth-traces | sqfree-density");
    asym_cmd->add_option("--ns", asym_args.ns, "sample points (comma separated)")
        ->delimiter(',');
    asym_cmd->add_option("--k", asym_args.k, "degree for fixed-k-betti");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (g.threads > 0) omp_set_num_threads(g.threads);

    try {
        if (g.face_cap < 1) throw std::invalid_argument("--face-cap must be >= 1");
        if (g.counter_limit && g.limit && g.counter_limit > g.limit)
            throw std::invalid_argument("--counter-limit must not exceed --limit");
        if (betti_cmd->parsed()) return cmd_betti(g, betti_args);
        if (verify_cmd->parsed()) return cmd_verify(g, verify_args);
        if (series_cmd->parsed()) return cmd_series(g, series_args);
        if (asym_cmd->parsed()) return cmd_asymptotics(g, asym_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
