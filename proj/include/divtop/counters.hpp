// Prefix counts of squarefree integers by weight and parity: sigma(x),
// sigma_k(x), sigma^odd(x), sigma_k^odd(x) and the even complements, each an
// O(1) array lookup after construction. All arguments are floored; counts are
// over the integers in (0, x].

#pragma once

#include <cstdint>
#include <vector>

#include "divtop/sieve.hpp"

namespace divtop {

class WeightCounters {
public:
    WeightCounters() = default;
    WeightCounters(const SieveTable& table, uint64_t up_to);

    uint64_t limit() const { return limit_; }
    // Largest k with sigma_k(limit) > 0; queries above it return 0.
    int max_weight() const { return max_weight_; }

    int64_t sigma(uint64_t x) const { return x < 1 ? 0 : total_[check(x)]; }
    int64_t sigma_odd(uint64_t x) const { return x < 1 ? 0 : odd_total_[check(x)]; }
    int64_t sigma_even(uint64_t x) const { return sigma(x) - sigma_odd(x); }

    int64_t sigma_k(int k, uint64_t x) const {
        if (x < 1) return 0;
        check(x);
        return (k < 0 || k > max_weight_) ? 0 : per_weight_[k][x];
    }
    int64_t sigma_k_odd(int k, uint64_t x) const {
        if (x < 1) return 0;
        check(x);
        return (k < 0 || k > max_weight_) ? 0 : odd_per_weight_[k][x];
    }
    int64_t sigma_k_even(int k, uint64_t x) const { return sigma_k(k, x) - sigma_k_odd(k, x); }

    // Floor-and-clamp for real arguments: 0 for x < 1.
    static uint64_t floor_index(double x) {
        return x < 1.0 ? 0 : static_cast<uint64_t>(x);
    }

private:
    uint64_t check(uint64_t x) const;

    uint64_t limit_ = 0;
    int max_weight_ = 0;
    std::vector<std::vector<uint32_t>> per_weight_;      // [k][x], k = 0..max_weight
    std::vector<std::vector<uint32_t>> odd_per_weight_;  // odd integers only
    std::vector<uint32_t> total_;
    std::vector<uint32_t> odd_total_;
};

}  // namespace divtop
