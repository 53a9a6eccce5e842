#include "divtop/shadow.hpp"

#include <stdexcept>
#include <string>

#include "divtop/betti.hpp"

namespace divtop {

uint64_t binomial64(uint64_t a, uint64_t b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    unsigned __int128 acc = 1;
    for (uint64_t i = 1; i <= b; i++) {
        acc = acc * (a - b + i) / i;  // exact at each step: C(a-b+i, i)
        if (acc > static_cast<unsigned __int128>(UINT64_MAX))
            throw std::overflow_error("binomial64: C(" + std::to_string(a) + "," +
                                      std::to_string(b) + ") exceeds uint64");
    }
    return static_cast<uint64_t>(acc);
}

BigInt binomial_big(const BigInt& a, unsigned b) {
    if (a < b) return 0;
    BigInt acc = 1;
    for (unsigned i = 1; i <= b; i++) acc = acc * (a - b + i) / i;
    return acc;
}

uint64_t CascadeRep::reconstruct() const {
    unsigned __int128 s = 0;
    for (const auto& [a, j] : digits) s += binomial64(a, j);
    return static_cast<uint64_t>(s);
}

namespace {

// min(C(a, b), cap + 1); the running value C(a-b+i, i) is nondecreasing in i,
// so saturation can be decided early.
uint64_t binomial_capped(uint64_t a, unsigned b, uint64_t cap) {
    if (b > a) return 0;
    unsigned __int128 acc = 1;
    for (unsigned i = 1; i <= b; i++) {
        acc = acc * (a - b + i) / i;
        if (acc > cap) return cap == UINT64_MAX ? UINT64_MAX : cap + 1;
    }
    return static_cast<uint64_t>(acc);
}

// largest a with C(a, j) <= rem, for rem >= 1 (gallop then bisect)
uint64_t max_binomial_base(uint64_t rem, unsigned j) {
    if (j == 1) return rem;
    uint64_t lo = j;  // C(j, j) = 1 <= rem
    uint64_t step = 1;
    while (binomial_capped(lo + step, j, rem) <= rem) {
        lo += step;
        step *= 2;
    }
    while (step > 1) {
        step /= 2;
        if (binomial_capped(lo + step, j, rem) <= rem) lo += step;
    }
    return lo;
}

}  // namespace

CascadeRep cascade(uint64_t n, unsigned k) {
    if (k < 1) throw std::invalid_argument("cascade: k must be >= 1");
    CascadeRep rep;
    rep.n = n;
    rep.k = k;
    uint64_t rem = n;
    unsigned j = k;
    while (rem > 0 && j >= 1) {
        const uint64_t a = max_binomial_base(rem, j);
        rep.digits.emplace_back(a, j);
        rem -= binomial64(a, j);
        j--;
    }
    return rep;
}

namespace {

uint64_t shadow_sum(const CascadeRep& rep, bool upper) {
    unsigned __int128 s = 0;
    for (const auto& [a, j] : rep.digits) {
        const uint64_t top = upper ? a - 1 : a;
        s += (j == 1) ? 1 : binomial64(top, j - 1);  // C(., 0) = 1
        if (s > static_cast<unsigned __int128>(INT64_MAX))
            throw std::overflow_error("shadow: value exceeds int64");
    }
    return static_cast<uint64_t>(s);
}

}  // namespace

uint64_t lower_shadow(uint64_t n, unsigned k) {
    if (n == 0) return 0;
    return shadow_sum(cascade(n, k), false);
}

uint64_t upper_shadow(uint64_t n, unsigned k) {
    if (n == 0) return 0;
    return shadow_sum(cascade(n, k), true);
}

ShadowReport verify_shadow_inequalities(uint64_t n, const WeightCounters& counters) {
    ShadowReport rep;
    rep.n = n;
    const uint64_t half = n / 2;
    for (int k = 1; k <= counters.max_weight() + 1; k++) {
        ShadowInequalityRow r1;
        r1.n = n;
        r1.k = k;
        r1.lhs = static_cast<int64_t>(
            lower_shadow(counters.sigma_k_odd(k + 1, n), k + 1));
        r1.rhs = counters.sigma_k_odd(k, half);
        rep.family1.push_back(r1);

        ShadowInequalityRow r2;
        r2.n = n;
        r2.k = k;
        r2.lhs = static_cast<int64_t>(upper_shadow(
            counters.sigma_k_odd(2 * k + 2, n) + counters.sigma_k_odd(2 * k + 1, n), k + 1));
        r2.rhs = counters.sigma_k_odd(2 * k, half) + counters.sigma_k_odd(2 * k - 1, half);
        rep.family2.push_back(r2);

        if (!r1.ok() || !r2.ok()) rep.ok = false;
    }
    return rep;
}

int64_t chi_truncated(uint64_t n, unsigned k, const WeightCounters& counters) {
    if (k < 1) throw std::invalid_argument("chi_truncated: k must be >= 1");
    const FVector f = f_vector_delta(n, counters);
    const BettiVector beta = betti_delta(n, counters);
    int64_t alt = 0;
    for (int j = counters.max_weight(); j >= static_cast<int>(k); j--)
        alt = (f.get(j) - beta.get(j)) - alt;
    const int64_t closed = counters.sigma_k_odd(k, n / 2);
    if (alt != closed)
        throw std::logic_error("chi_truncated: alternating sum " + std::to_string(alt) +
                               " != closed form " + std::to_string(closed) + " at n=" +
                               std::to_string(n) + " k=" + std::to_string(k));
    return closed;
}

FBetaReport verify_fbeta_relations(uint64_t n, const WeightCounters& counters) {
    FBetaReport rep;
    rep.n = n;
    const FVector f = f_vector_delta(n, counters);
    const BettiVector beta = betti_delta(n, counters);
    const uint64_t half = n / 2;
    for (unsigned k = 1; k <= static_cast<unsigned>(counters.max_weight()) + 1; k++) {
        FBetaRow row;
        row.k = k;
        const int64_t chi_k = chi_truncated(n, k + 1, counters);
        const int64_t chi_km1 = chi_truncated(n, k, counters);

        row.lower.n = n;
        row.lower.k = k;
        row.lower.lhs =
            static_cast<int64_t>(lower_shadow(chi_k + beta.get(k), k + 1));
        row.lower.rhs = chi_km1;

        row.upper.n = n;
        row.upper.k = k;
        row.upper.lhs = static_cast<int64_t>(
            upper_shadow(f.get(2 * k + 1) + beta.get(2 * k), k + 1));
        row.upper.rhs = f.get(2 * k - 1) - beta.get(2 * k - 1);

        // closed-form reductions of both relations to sigma^odd counts
        row.reductions_ok =
            chi_k + beta.get(k) == counters.sigma_k_odd(k + 1, n) &&
            f.get(2 * k + 1) + beta.get(2 * k) ==
                counters.sigma_k_odd(2 * k + 2, n) + counters.sigma_k_odd(2 * k + 1, n) &&
            f.get(2 * k - 1) - beta.get(2 * k - 1) ==
                counters.sigma_k_odd(2 * k, half) + counters.sigma_k_odd(2 * k - 1, half);

        if (!row.lower.ok() || !row.upper.ok() || !row.reductions_ok) rep.ok = false;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace divtop
