// Convergence reports comparing exact counted quantities against their
// leading asymptotic terms. Measured values are exact integers; predictions
// are evaluated in double precision and the ratio is formed last.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "divtop/counters.hpp"
#include "divtop/sieve.hpp"

namespace divtop {

struct ConvergenceRow {
    std::string quantity;
    uint64_t n = 0;
    int64_t measured = 0;
    double predicted = 0.0;
    double ratio = 0.0;      // measured / predicted
    double residual = 0.0;   // measured - predicted
    bool degenerate = false; // no meaningful comparison at this n
};

ConvergenceRow make_row(std::string quantity, uint64_t n, int64_t measured,
                        double predicted);

// Total Betti sum of Delta_n vs 2n/pi^2.
std::vector<ConvergenceRow> report_total_betti_delta(std::span<const uint64_t> ns,
                                                     const WeightCounters& counters);

// Even/odd Betti sums of Delta_n vs n/pi^2, or of the cell complex vs n/6.
enum class ComplexKind { Delta, DeltaTilde };
std::vector<ConvergenceRow> report_parity_betti(std::span<const uint64_t> ns,
                                                ComplexKind which,
                                                const SieveTable& table,
                                                const WeightCounters& counters);

// beta_k(Delta_n) vs n/(2 log n) (log log n)^k / k!; log log convergence is
// far too slow to test at desk scale, so these rows are report-only.
std::vector<ConvergenceRow> report_fixed_k_betti(int k, std::span<const uint64_t> ns,
                                                 const WeightCounters& counters);

// Total Betti sum of the cell complex vs n/3.
std::vector<ConvergenceRow> report_total_betti_delta_tilde(
    std::span<const uint64_t> ns, const SieveTable& table,
    const WeightCounters& counters);

// Observational traces M(n)/sqrt(n), L(n)/sqrt(n), M(n)/n, L(n)/n.
std::vector<ConvergenceRow> report_growth_traces(std::span<const uint64_t> ns,
                                                 const SummatoryTables& summ);

// sigma(n) vs 6n/pi^2, plus the modal face dimension of Delta_n against the
// log log n rule of thumb.
std::vector<ConvergenceRow> report_sqfree_density(std::span<const uint64_t> ns,
                                                  const SieveTable& table);

// Counts of squarefree integers <= n by weight, one pass over the sieve;
// used for the modal (most common) face dimension.
std::vector<int64_t> weight_census(uint64_t n, const SieveTable& table);
int modal_face_dimension(uint64_t n, const SieveTable& table);

}  // namespace divtop
