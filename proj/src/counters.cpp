#include "divtop/counters.hpp"

#include <stdexcept>

namespace divtop {

WeightCounters::WeightCounters(const SieveTable& table, uint64_t up_to) {
    if (up_to < 1 || up_to > table.limit())
        throw std::out_of_range("WeightCounters: up_to must be in [1, sieve limit]");
    limit_ = up_to;

    max_weight_ = 0;
    for (uint64_t k = 1; k <= up_to; k++)
        if (table.squarefree(k) && static_cast<int>(table.omega(k)) > max_weight_)
            max_weight_ = table.omega(k);

    per_weight_.assign(max_weight_ + 1, std::vector<uint32_t>(up_to + 1, 0));
    odd_per_weight_.assign(max_weight_ + 1, std::vector<uint32_t>(up_to + 1, 0));
    total_.assign(up_to + 1, 0);
    odd_total_.assign(up_to + 1, 0);

    for (uint64_t x = 1; x <= up_to; x++) {
        for (int k = 0; k <= max_weight_; k++) {
            per_weight_[k][x] = per_weight_[k][x - 1];
            odd_per_weight_[k][x] = odd_per_weight_[k][x - 1];
        }
        total_[x] = total_[x - 1];
        odd_total_[x] = odd_total_[x - 1];
        if (table.squarefree(x)) {
            const int w = table.omega(x);
            per_weight_[w][x]++;
            total_[x]++;
            if (x & 1) {
                odd_per_weight_[w][x]++;
                odd_total_[x]++;
            }
        }
    }
}

uint64_t WeightCounters::check(uint64_t x) const {
    if (x > limit_) throw std::out_of_range("WeightCounters: x exceeds counter limit");
    return x;
}

}  // namespace divtop
