#include "divtop/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "divtop/betti.hpp"

namespace divtop {

namespace {
constexpr double kPiSquared = std::numbers::pi * std::numbers::pi;
}

ConvergenceRow make_row(std::string quantity, uint64_t n, int64_t measured,
                        double predicted) {
    ConvergenceRow r;
    r.quantity = std::move(quantity);
    r.n = n;
    r.measured = measured;
    r.predicted = predicted;
    r.degenerate = !(std::isfinite(predicted) && predicted > 0.0) || measured <= 0;
    r.ratio = r.degenerate ? 0.0 : static_cast<double>(measured) / predicted;
    r.residual = std::isfinite(predicted) ? static_cast<double>(measured) - predicted : 0.0;
    return r;
}

std::vector<ConvergenceRow> report_total_betti_delta(std::span<const uint64_t> ns,
                                                     const WeightCounters& counters) {
    std::vector<ConvergenceRow> rows;
    for (uint64_t n : ns) {
        const int64_t total = betti_delta(n, counters).sum_from(0);
        rows.push_back(make_row("total_betti_delta", n, total, 2.0 * n / kPiSquared));
    }
    return rows;
}

std::vector<ConvergenceRow> report_parity_betti(std::span<const uint64_t> ns,
                                                ComplexKind which,
                                                const SieveTable& table,
                                                const WeightCounters& counters) {
    std::vector<ConvergenceRow> rows;
    for (uint64_t n : ns) {
        const BettiVector v = which == ComplexKind::Delta
                                  ? betti_delta(n, counters)
                                  : betti_delta_tilde(n, table, counters);
        const auto [even, odd] = parity_sums(v);
        const double lead = which == ComplexKind::Delta ? n / kPiSquared : n / 6.0;
        const char* base =
            which == ComplexKind::Delta ? "betti_delta" : "betti_delta_tilde";
        rows.push_back(make_row(std::string(base) + "_even", n, even, lead));
        rows.push_back(make_row(std::string(base) + "_odd", n, odd, lead));
    }
    return rows;
}

std::vector<ConvergenceRow> report_fixed_k_betti(int k, std::span<const uint64_t> ns,
                                                 const WeightCounters& counters) {
    std::vector<ConvergenceRow> rows;
    double kfact = 1.0;
    for (int i = 2; i <= k; i++) kfact *= i;
    for (uint64_t n : ns) {
        const int64_t b = betti_delta(n, counters).get(k);
        double predicted = 0.0;
        if (n >= 3) {
            const double ln = std::log(static_cast<double>(n));
            predicted = n / (2.0 * ln) * std::pow(std::log(ln), k) / kfact;
        }
        rows.push_back(
            make_row("betti_delta_k" + std::to_string(k), n, b, predicted));
    }
    return rows;
}

std::vector<ConvergenceRow> report_total_betti_delta_tilde(
    std::span<const uint64_t> ns, const SieveTable& table,
    const WeightCounters& counters) {
    std::vector<ConvergenceRow> rows;
    for (uint64_t n : ns) {
        const int64_t total = betti_delta_tilde(n, table, counters).sum_from(0);
        rows.push_back(make_row("total_betti_delta_tilde", n, total, n / 3.0));
    }
    return rows;
}

std::vector<ConvergenceRow> report_growth_traces(std::span<const uint64_t> ns,
                                                 const SummatoryTables& summ) {
    std::vector<ConvergenceRow> rows;
    for (uint64_t n : ns) {
        const int64_t m = mertens(summ, n);
        const int64_t l = liouville_summatory(summ, n);
        const double sq = std::sqrt(static_cast<double>(n));
        for (const auto& [name, value, scale] :
             {std::tuple{"mertens_over_sqrt_n", m, sq},
              std::tuple{"liouville_over_sqrt_n", l, sq},
              std::tuple{"mertens_over_n", m, static_cast<double>(n)},
              std::tuple{"liouville_over_n", l, static_cast<double>(n)}}) {
            ConvergenceRow r;
            r.quantity = name;
            r.n = n;
            r.measured = value;
            r.predicted = scale;
            r.ratio = value / scale;  // the trace itself; may be negative
            r.residual = value - scale;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::vector<int64_t> weight_census(uint64_t n, const SieveTable& table) {
    if (n > table.limit()) throw std::out_of_range("weight_census: n exceeds sieve limit");
    std::vector<int64_t> counts;
    for (uint64_t k = 1; k <= n; k++) {
        if (!table.squarefree(k)) continue;
        const unsigned w = table.omega(k);
        if (w >= counts.size()) counts.resize(w + 1, 0);
        counts[w]++;
    }
    return counts;
}

int modal_face_dimension(uint64_t n, const SieveTable& table) {
    const auto counts = weight_census(n, table);
    int modal_weight = 0;
    for (size_t w = 1; w < counts.size(); w++)
        if (counts[w] > counts[modal_weight]) modal_weight = static_cast<int>(w);
    return modal_weight - 1;
}

std::vector<ConvergenceRow> report_sqfree_density(std::span<const uint64_t> ns,
                                                  const SieveTable& table) {
    std::vector<ConvergenceRow> rows;
    std::vector<uint64_t> sorted(ns.begin(), ns.end());
    std::sort(sorted.begin(), sorted.end());
    for (uint64_t n : sorted) {
        const auto counts = weight_census(n, table);
        int64_t total = 0;
        for (int64_t c : counts) total += c;
        rows.push_back(make_row("sqfree_density", n, total, 6.0 * n / kPiSquared));
        if (n >= 2) {
            int modal_weight = 0;
            for (size_t w = 1; w < counts.size(); w++)
                if (counts[w] > counts[modal_weight]) modal_weight = static_cast<int>(w);
            const double loglog =
                n >= 3 ? std::log(std::log(static_cast<double>(n))) : 0.0;
            rows.push_back(
                make_row("modal_face_dimension", n, modal_weight - 1, loglog));
        }
    }
    return rows;
}

}  // namespace divtop
