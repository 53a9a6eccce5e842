// Verification sweeps over ranges of n. Each sweep checks an exact identity
// or inequality family at every n and reports violations with both sides.
//
// Sweeps are embarrassingly parallel over n and run under OpenMP by default;
// threads = 1 takes the plain serial loop. Results are identical either way:
// violation counts are exact and failure diagnostics are sorted by n.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divtop/counters.hpp"
#include "divtop/sieve.hpp"

namespace divtop {

struct SweepOptions {
    uint64_t max_n = 0;
    int threads = 0;                    // 0 = runtime default, 1 = serial reference
    uint64_t face_cap = 100'000;
    size_t max_failures_reported = 10;  // diagnostics kept per sweep
};

struct SweepResult {
    std::string suite;
    uint64_t max_n = 0;
    uint64_t checked = 0;
    uint64_t violations = 0;
    std::vector<std::string> failures;  // sorted by n, capped
    bool ok() const { return violations == 0; }
    std::string summary() const;
};

// Formula vs shifted count vs integer homology, all k, plus empty torsion.
SweepResult sweep_homology(const SieveTable& table, const WeightCounters& counters,
                           const SweepOptions& opt);

// verify_shifted(Delta_n) for every n.
SweepResult sweep_shifted(const SieveTable& table, const SweepOptions& opt);

// M(n) and L(n) against the alternating Betti sums of both complexes, and the
// cell-census Euler characteristic of the cell complex.
SweepResult sweep_euler(const SieveTable& table, const WeightCounters& counters,
                        const SummatoryTables& summ, const SweepOptions& opt);

// Both reconstructions of the Mobius-inversion pair against direct values.
SweepResult sweep_inversion(const SieveTable& table, const SummatoryTables& summ,
                            const SweepOptions& opt);

// sigma_k^even(x) = sigma_{k-1}^odd(x/2) and the alternating halving
// identities for sigma_k^odd and sigma^odd, all k, all x.
SweepResult sweep_sigma_lemmas(const WeightCounters& counters, const SweepOptions& opt);

// Shadow inequalities for all n <= max_n; the f/beta relations and the
// truncated-chi dual evaluation for all n <= min(max_n, 5000).
SweepResult sweep_shadow(const WeightCounters& counters, const SweepOptions& opt);

// Wedge-split homology of the divisor multicomplex against the closed-form
// cell-complex Betti vector, n <= min(max_n, 500).
SweepResult sweep_multicomplex(const SieveTable& table, const WeightCounters& counters,
                               const SweepOptions& opt);

}  // namespace divtop
