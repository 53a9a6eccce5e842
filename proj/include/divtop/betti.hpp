// Closed-form Betti numbers, f-vectors, and Euler-characteristic identities
// for the squarefree divisor complex Delta_n and the full divisor cell
// complex (written delta-tilde throughout the CLI).
//
// Betti vectors are sparse maps indexed from k = -1 so that Delta_1 (a single
// empty face, beta_{-1} = 1) and the boundary terms of the wedge splitting
// need no special cases.

#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "divtop/counters.hpp"
#include "divtop/sieve.hpp"

namespace divtop {

enum class BettiMethod { Formula, ShiftedCount, HomologyOracle, WedgeSplit };

const char* to_string(BettiMethod m);

class BettiVector {
public:
    BettiVector() = default;
    BettiVector(uint64_t n, BettiMethod method) : n_(n), method_(method) {}

    uint64_t n() const { return n_; }
    BettiMethod method() const { return method_; }
    const std::map<int, int64_t>& values() const { return values_; }

    int64_t get(int k) const {
        auto it = values_.find(k);
        return it == values_.end() ? 0 : it->second;
    }
    void set(int k, int64_t v) {
        if (v == 0)
            values_.erase(k);
        else
            values_[k] = v;
    }
    void add(int k, int64_t v) { set(k, get(k) + v); }

    // sum_{k >= k_min} beta_k
    int64_t sum_from(int k_min) const;
    // sum_{k >= k_min} (-1)^{k-1} beta_k
    int64_t alternating_sum(int k_min = -1) const;
    int max_index() const;  // -2 when empty

    bool same_values(const BettiVector& other) const { return values_ == other.values_; }

private:
    uint64_t n_ = 0;
    BettiMethod method_ = BettiMethod::Formula;
    std::map<int, int64_t> values_;
};

struct FVector {
    uint64_t n = 0;
    std::map<int, int64_t> f;  // j >= -1, f[-1] = 1 (empty face)

    int64_t get(int j) const {
        auto it = f.find(j);
        return it == f.end() ? 0 : it->second;
    }
};

// beta_k(Delta_n) = sigma_{k+1}^odd(n) - sigma_{k+1}^odd(floor(n/2)),
// valid verbatim from k = -1 up.
BettiVector betti_delta(uint64_t n, const WeightCounters& counters);

// Independent path: beta_k = #{odd squarefree b <= n : 2b > n, Omega(b) = k+1}
// by direct enumeration over the sieve.
BettiVector betti_delta_shifted_count(uint64_t n, const SieveTable& table);

// f_j(Delta_n) = sigma_{j+1}(n); f_{-1} = 1.
FVector f_vector_delta(uint64_t n, const WeightCounters& counters);

// Wedge splitting over full squares r^2 <= n:
// beta_k = sum_r beta_{k - 2 Omega(r)}(Delta_{floor(n/r^2)}).
BettiVector betti_delta_tilde(uint64_t n, const SieveTable& table,
                              const WeightCounters& counters);

// M(n) against both alternating sums: sum (-1)^{k-1} beta_k and the f-vector
// route -(reduced Euler characteristic).
struct EulerDeltaReport {
    uint64_t n = 0;
    int64_t mertens_value = 0;
    int64_t betti_alternating = 0;
    int64_t face_alternating = 0;
    bool ok = false;
};
EulerDeltaReport euler_check_delta(uint64_t n, const WeightCounters& counters,
                                   const SummatoryTables& summ);

// chi(delta-tilde_n) from the cell census (dim c(k) = Omega(k) - 1) and from
// the wedge-split Betti numbers; both must equal -L(n).
struct EulerTildeReport {
    uint64_t n = 0;
    int64_t liouville_value = 0;
    int64_t chi_from_cells = 0;
    int64_t chi_from_betti = 0;
    bool ok = false;
};
EulerTildeReport euler_check_delta_tilde(uint64_t n, const SieveTable& table,
                                         const WeightCounters& counters,
                                         const SummatoryTables& summ);

// (sum of beta_k over even k >= 0, sum over odd k).
std::pair<int64_t, int64_t> parity_sums(const BettiVector& v);

}  // namespace divtop
