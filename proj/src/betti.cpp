#include "divtop/betti.hpp"

#include <limits>
#include <stdexcept>

namespace divtop {

const char* to_string(BettiMethod m) {
    switch (m) {
        case BettiMethod::Formula: return "formula";
        case BettiMethod::ShiftedCount: return "shifted-count";
        case BettiMethod::HomologyOracle: return "homology-oracle";
        case BettiMethod::WedgeSplit: return "wedge-split";
    }
    return "?";
}

int64_t BettiVector::sum_from(int k_min) const {
    int64_t s = 0;
    for (const auto& [k, v] : values_)
        if (k >= k_min) s += v;
    return s;
}

int64_t BettiVector::alternating_sum(int k_min) const {
    int64_t s = 0;
    for (const auto& [k, v] : values_)
        if (k >= k_min) s += ((k - 1) & 1) ? -v : v;
    return s;
}

int BettiVector::max_index() const {
    return values_.empty() ? -2 : values_.rbegin()->first;
}

BettiVector betti_delta(uint64_t n, const WeightCounters& counters) {
    BettiVector out(n, BettiMethod::Formula);
    const uint64_t half = n / 2;
    for (int k = -1; k + 1 <= counters.max_weight(); k++) {
        const int64_t b = counters.sigma_k_odd(k + 1, n) - counters.sigma_k_odd(k + 1, half);
        out.set(k, b);
    }
    return out;
}

BettiVector betti_delta_shifted_count(uint64_t n, const SieveTable& table) {
    if (n > table.limit())
        throw std::out_of_range("betti_delta_shifted_count: n exceeds sieve limit");
    BettiVector out(n, BettiMethod::ShiftedCount);
    for (uint64_t b = n / 2 + 1; b <= n; b++)  // exactly the b with 2b > n
        if ((b & 1) && table.squarefree(b))
            out.add(static_cast<int>(table.omega(b)) - 1, 1);
    return out;
}

FVector f_vector_delta(uint64_t n, const WeightCounters& counters) {
    FVector out;
    out.n = n;
    out.f[-1] = 1;
    for (int j = 0; j + 1 <= counters.max_weight(); j++) {
        const int64_t fj = counters.sigma_k(j + 1, n);
        if (fj) out.f[j] = fj;
    }
    return out;
}

BettiVector betti_delta_tilde(uint64_t n, const SieveTable& table,
                              const WeightCounters& counters) {
    if (n > table.limit())
        throw std::out_of_range("betti_delta_tilde: n exceeds sieve limit");
    BettiVector out(n, BettiMethod::WedgeSplit);
    for (uint64_t r = 1; r * r <= n; r++) {
        const uint64_t m = n / (r * r);
        const int shift = 2 * static_cast<int>(table.omega(r));
        const BettiVector piece = betti_delta(m, counters);
        for (const auto& [k, v] : piece.values()) out.add(k + shift, v);
    }
    return out;
}

EulerDeltaReport euler_check_delta(uint64_t n, const WeightCounters& counters,
                                   const SummatoryTables& summ) {
    EulerDeltaReport r;
    r.n = n;
    r.mertens_value = mertens(summ, n);
    r.betti_alternating = betti_delta(n, counters).alternating_sum(-1);
    // -reduced Euler characteristic = -sum_{j >= -1} (-1)^j f_j
    const FVector f = f_vector_delta(n, counters);
    int64_t chi = 0;
    for (const auto& [j, fj] : f.f) chi += (j & 1) ? -fj : fj;
    r.face_alternating = -chi;
    r.ok = r.mertens_value == r.betti_alternating && r.mertens_value == r.face_alternating;
    return r;
}

EulerTildeReport euler_check_delta_tilde(uint64_t n, const SieveTable& table,
                                         const WeightCounters& counters,
                                         const SummatoryTables& summ) {
    EulerTildeReport r;
    r.n = n;
    r.liouville_value = liouville_summatory(summ, n);
    int64_t chi = 0;  // sum over cells of (-1)^{dim} with dim = Omega(k) - 1
    for (uint64_t k = 1; k <= n; k++) chi += (table.omega(k) & 1) ? 1 : -1;
    r.chi_from_cells = chi;
    const BettiVector b = betti_delta_tilde(n, table, counters);
    int64_t chi_b = 0;
    for (const auto& [k, v] : b.values()) chi_b += (k & 1) ? -v : v;
    r.chi_from_betti = chi_b;
    r.ok = r.chi_from_cells == -r.liouville_value && r.chi_from_betti == -r.liouville_value;
    return r;
}

std::pair<int64_t, int64_t> parity_sums(const BettiVector& v) {
    int64_t even = 0, odd = 0;
    for (const auto& [k, val] : v.values()) {
        if (k < 0) continue;
        if (k & 1)
            odd += val;
        else
            even += val;
    }
    return {even, odd};
}

}  // namespace divtop
