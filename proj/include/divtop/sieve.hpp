// Sieve-based exact arithmetic over [1, N]: least prime factor, weight
// Omega(k) (prime factors with multiplicity), Mobius mu, squarefree flags,
// and the summatory functions M(n) and L(n) built on top of them.
//
// Memory: ~10 bytes per integer (4 lpf + 1 omega + 1 mu + 1/8 squarefree bit
// + slack), so N = 10^7 stays under 100 MB and the default budget caps N at
// 10^8. Construction is segmented; segments may be sieved in parallel and
// the result is bit-identical to the sequential build.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace divtop {

using BigInt = boost::multiprecision::cpp_int;

struct SieveConfig {
    uint64_t memory_budget = 100'000'000;  // largest accepted limit
    uint64_t segment_length = 1u << 22;    // rounded up to a multiple of 64
    int threads = 0;                       // 0 = runtime default, 1 = serial reference path
};

class SieveTable {
public:
    uint64_t limit() const { return limit_; }

    // Least prime factor; lpf(1) = 1.
    uint32_t lpf(uint64_t k) const { return lpf_[k]; }
    // Omega(k): number of prime factors counted with multiplicity.
    unsigned omega(uint64_t k) const { return omega_[k]; }
    int mu(uint64_t k) const { return mu_[k]; }
    bool squarefree(uint64_t k) const {
        return (sqfree_words_[k >> 6] >> (k & 63)) & 1u;
    }
    bool is_prime(uint64_t k) const { return k >= 2 && lpf_[k] == k; }
    // Liouville lambda(k) = (-1)^Omega(k).
    int lambda(uint64_t k) const { return (omega_[k] & 1) ? -1 : 1; }

    const std::vector<uint8_t>& omega_data() const { return omega_; }
    const std::vector<int8_t>& mu_data() const { return mu_; }

private:
    uint64_t limit_ = 0;
    std::vector<uint32_t> lpf_;
    std::vector<uint8_t> omega_;
    std::vector<int8_t> mu_;
    std::vector<uint64_t> sqfree_words_;

    friend SieveTable build_sieve(uint64_t, const SieveConfig&);
};

// Throws std::invalid_argument for limit = 0 and std::length_error when the
// limit exceeds the configured memory budget.
SieveTable build_sieve(uint64_t limit, const SieveConfig& cfg = {});

// Prefix sums M(n) = sum_{k<=n} mu(k) and L(n) = sum_{k<=n} (-1)^Omega(k).
struct SummatoryTables {
    uint64_t limit = 0;
    std::vector<int64_t> mertens_prefix;    // index 0..limit, [0] = 0
    std::vector<int64_t> liouville_prefix;
};

SummatoryTables build_summatory(const SieveTable& table, uint64_t up_to);

// Exact prefix values; 0 for n < 1, std::out_of_range for n > limit.
int64_t mertens(const SummatoryTables& t, uint64_t n);
int64_t liouville_summatory(const SummatoryTables& t, uint64_t n);

// Binary cache: header {magic "DVT1", limit as little-endian u64}, then the
// mertens and liouville prefix arrays (1..limit) as little-endian i64 records.
void save_summatory(const SummatoryTables& t, const std::string& path);
SummatoryTables load_summatory(const std::string& path);

// dim Delta_n = max{k : p_1 p_2 ... p_k <= n} - 1, exact primorials.
// Throws std::domain_error for n < 2 (Delta_1 has no vertices; its dimension
// is -1 by convention).
int primorial_dim(const BigInt& n);
int primorial_dim(uint64_t n);

// L(n) = sum_{r<=sqrt(n)} M(floor(n/r^2)) and the Mobius-inverted mirror
// M(n) = sum_{r<=sqrt(n)} mu(r) L(floor(n/r^2)).
struct InversionPair {
    int64_t liouville_from_mertens = 0;
    int64_t mertens_from_liouville = 0;
};
InversionPair mobius_inversion_pair(uint64_t n, const SieveTable& table,
                                    const SummatoryTables& summ);

uint64_t isqrt(uint64_t n);

}  // namespace divtop
