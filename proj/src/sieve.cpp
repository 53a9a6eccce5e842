#include "divtop/sieve.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace divtop {

uint64_t isqrt(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) r--;
    while ((r + 1) * (r + 1) <= n) r++;
    return r;
}

namespace {

std::vector<uint32_t> simple_primes(uint64_t limit) {
    std::vector<uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<char> mark(limit + 1, 1);
    for (uint64_t i = 2; i * i <= limit; i++)
        if (mark[i])
            for (uint64_t j = i * i; j <= limit; j += i) mark[j] = 0;
    for (uint64_t i = 2; i <= limit; i++)
        if (mark[i]) primes.push_back(static_cast<uint32_t>(i));
    return primes;
}

// Sieve one segment [lo, hi] (inclusive, lo a multiple of 64) into the shared
// arrays. Segments cover disjoint index and bit-word ranges, so concurrent
// calls never touch the same memory.
void sieve_segment(uint64_t lo, uint64_t hi, const std::vector<uint32_t>& primes,
                   std::vector<uint32_t>& lpf, std::vector<uint8_t>& omega,
                   std::vector<int8_t>& mu, std::vector<uint64_t>& sqfree_words) {
    const uint64_t len = hi - lo + 1;
    std::vector<uint64_t> rem(len);
    std::vector<char> sqf(len, 1);
    for (uint64_t i = 0; i < len; i++) rem[i] = lo + i;

    const uint64_t first = std::max<uint64_t>(lo, 2);
    for (uint32_t p : primes) {
        const uint64_t pp = static_cast<uint64_t>(p) * p;
        if (pp > hi) break;
        uint64_t start = ((first + p - 1) / p) * static_cast<uint64_t>(p);
        if (start < 2 * static_cast<uint64_t>(p)) start = 2 * static_cast<uint64_t>(p);
        for (uint64_t m = start; m <= hi; m += p) {
            const uint64_t i = m - lo;
            unsigned e = 0;
            while (rem[i] % p == 0) {
                rem[i] /= p;
                e++;
            }
            omega[m] += static_cast<uint8_t>(e);
            if (e >= 2) sqf[i] = 0;
            if (lpf[m] == 0) lpf[m] = p;
        }
    }
    for (uint64_t m = first; m <= hi; m++) {
        const uint64_t i = m - lo;
        if (rem[i] > 1) {  // one remaining prime factor > sqrt(limit)
            omega[m] += 1;
            if (lpf[m] == 0) lpf[m] = static_cast<uint32_t>(rem[i]);
        }
        mu[m] = sqf[i] ? ((omega[m] & 1) ? -1 : 1) : 0;
    }
    // Pack squarefree bits word by word; the word range [lo/64, (hi+1)/64) is
    // exclusive to this segment because lo and the segment length are
    // multiples of 64 (except the final partial word, also exclusive).
    for (uint64_t w = lo >> 6; w <= (hi >> 6); w++) {
        uint64_t bits = 0;
        const uint64_t kmax = std::min<uint64_t>(hi, w * 64 + 63);
        for (uint64_t k = std::max<uint64_t>(first, w * 64); k <= kmax; k++)
            if (sqf[k - lo]) bits |= 1ull << (k & 63);
        sqfree_words[w] = bits;
    }
}

}  // namespace

SieveTable build_sieve(uint64_t limit, const SieveConfig& cfg) {
    if (limit == 0) throw std::invalid_argument("build_sieve: limit must be >= 1");
    if (limit > cfg.memory_budget)
        throw std::length_error("build_sieve: limit " + std::to_string(limit) +
                                " exceeds memory budget " + std::to_string(cfg.memory_budget));
    if (limit > 0xFFFFFFFFull)
        throw std::length_error("build_sieve: limit above 2^32 is unsupported");

    SieveTable t;
    t.limit_ = limit;
    t.lpf_.assign(limit + 1, 0);
    t.omega_.assign(limit + 1, 0);
    t.mu_.assign(limit + 1, 0);
    t.sqfree_words_.assign(limit / 64 + 1, 0);

    const auto primes = simple_primes(isqrt(limit));
    uint64_t seg = std::max<uint64_t>(cfg.segment_length, 64);
    seg = (seg + 63) & ~63ull;  // multiple of 64 keeps bit words segment-local
    const uint64_t nseg = limit / seg + 1;

    if (cfg.threads == 1) {
        for (uint64_t s = 0; s < nseg; s++) {
            const uint64_t lo = s * seg;
            const uint64_t hi = std::min(limit, lo + seg - 1);
            if (hi >= 2) sieve_segment(lo, hi, primes, t.lpf_, t.omega_, t.mu_, t.sqfree_words_);
        }
    } else {
        const int nthreads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
        for (uint64_t s = 0; s < nseg; s++) {
            const uint64_t lo = s * seg;
            const uint64_t hi = std::min(limit, lo + seg - 1);
            if (hi >= 2) sieve_segment(lo, hi, primes, t.lpf_, t.omega_, t.mu_, t.sqfree_words_);
        }
    }

    t.lpf_[1] = 1;
    t.mu_[1] = 1;
    t.sqfree_words_[0] |= 2;  // bit for k = 1
    return t;
}

SummatoryTables build_summatory(const SieveTable& table, uint64_t up_to) {
    if (up_to > table.limit())
        throw std::out_of_range("build_summatory: up_to exceeds sieve limit");
    SummatoryTables t;
    t.limit = up_to;
    t.mertens_prefix.assign(up_to + 1, 0);
    t.liouville_prefix.assign(up_to + 1, 0);
    for (uint64_t k = 1; k <= up_to; k++) {
        t.mertens_prefix[k] = t.mertens_prefix[k - 1] + table.mu(k);
        t.liouville_prefix[k] = t.liouville_prefix[k - 1] + table.lambda(k);
    }
    return t;
}

int64_t mertens(const SummatoryTables& t, uint64_t n) {
    if (n < 1) return 0;
    if (n > t.limit) throw std::out_of_range("mertens: n exceeds table limit");
    return t.mertens_prefix[n];
}

int64_t liouville_summatory(const SummatoryTables& t, uint64_t n) {
    if (n < 1) return 0;
    if (n > t.limit) throw std::out_of_range("liouville_summatory: n exceeds table limit");
    return t.liouville_prefix[n];
}

namespace {

void put_u64_le(std::ofstream& out, uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; i++) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(b, 8);
}

uint64_t get_u64_le(std::ifstream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; i++) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    return v;
}

}  // namespace

void save_summatory(const SummatoryTables& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_summatory: cannot open " + path);
    out.write("DVT1", 4);
    put_u64_le(out, t.limit);
    for (uint64_t k = 1; k <= t.limit; k++)
        put_u64_le(out, static_cast<uint64_t>(t.mertens_prefix[k]));
    for (uint64_t k = 1; k <= t.limit; k++)
        put_u64_le(out, static_cast<uint64_t>(t.liouville_prefix[k]));
    if (!out) throw std::runtime_error("save_summatory: write failed for " + path);
}

SummatoryTables load_summatory(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_summatory: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "DVT1", 4) != 0)
        throw std::runtime_error("load_summatory: bad magic in " + path);
    SummatoryTables t;
    t.limit = get_u64_le(in);
    t.mertens_prefix.assign(t.limit + 1, 0);
    t.liouville_prefix.assign(t.limit + 1, 0);
    for (uint64_t k = 1; k <= t.limit; k++)
        t.mertens_prefix[k] = static_cast<int64_t>(get_u64_le(in));
    for (uint64_t k = 1; k <= t.limit; k++)
        t.liouville_prefix[k] = static_cast<int64_t>(get_u64_le(in));
    if (!in) throw std::runtime_error("load_summatory: truncated file " + path);
    return t;
}

int primorial_dim(const BigInt& n) {
    if (n < 2) throw std::domain_error("primorial_dim: n must be >= 2 (dim Delta_1 = -1)");
    uint64_t bound = 1024;
    for (;;) {
        const auto primes = simple_primes(bound);
        BigInt primorial = 1;
        int count = 0;  // primes whose running product stayed <= n
        for (uint32_t p : primes) {
            primorial *= p;
            if (primorial > n) return count - 1;
            count++;
        }
        bound *= 4;  // primorial of all primes <= bound still <= n; extend
    }
}

int primorial_dim(uint64_t n) { return primorial_dim(BigInt(n)); }

InversionPair mobius_inversion_pair(uint64_t n, const SieveTable& table,
                                    const SummatoryTables& summ) {
    if (n > summ.limit) throw std::out_of_range("mobius_inversion_pair: n exceeds table limit");
    InversionPair out;
    for (uint64_t r = 1; r * r <= n; r++) {
        const uint64_t m = n / (r * r);
        out.liouville_from_mertens += mertens(summ, m);
        out.mertens_from_liouville += table.mu(r) * liouville_summatory(summ, m);
    }
    return out;
}

}  // namespace divtop
