// Cascade (k-binomial) representations and the shadow functions derived from
// them, plus verification of the inequalities they satisfy on the sigma^odd
// counting data.
//
// Every n >= 1 has a unique expansion n = C(a_k,k) + C(a_{k-1},k-1) + ... +
// C(a_i,i) with a_k > a_{k-1} > ... > a_i >= i >= 1; n = 0 has the empty
// expansion. The lower shadow maps each C(a_j,j) to C(a_j,j-1), the upper
// shadow to C(a_j-1,j-1), with C(a,0) = 1.

#pragma once

#include <cstdint>
#include <vector>

#include "divtop/counters.hpp"
#include "divtop/sieve.hpp"

namespace divtop {

// Exact binomial coefficient with overflow check; throws std::overflow_error
// when the value does not fit in uint64. C(a,0) = 1, C(a,b) = 0 for a < b.
uint64_t binomial64(uint64_t a, uint64_t b);
BigInt binomial_big(const BigInt& a, unsigned b);

struct CascadeRep {
    uint64_t n = 0;
    unsigned k = 1;
    std::vector<std::pair<uint64_t, unsigned>> digits;  // (a_j, j), j descending from k

    uint64_t reconstruct() const;
};

// Greedy maximal-binomial construction; digits come out strictly decreasing.
CascadeRep cascade(uint64_t n, unsigned k);

// lower_shadow(n, k) computes the lower shadow of the cascade with top index
// k, written with index k-1 in the usual notation; upper_shadow likewise.
uint64_t lower_shadow(uint64_t n, unsigned k);
uint64_t upper_shadow(uint64_t n, unsigned k);

struct ShadowInequalityRow {
    uint64_t n = 0;
    unsigned k = 0;
    int64_t lhs = 0;
    int64_t rhs = 0;
    int64_t slack() const { return rhs - lhs; }
    bool ok() const { return lhs <= rhs; }
};

// Both shadow inequality families over all admissible k >= 1:
//   (1) lower shadow of sigma_{k+1}^odd(n) vs sigma_k^odd(n/2)
//   (2) upper shadow of sigma_{2k+2}^odd(n)+sigma_{2k+1}^odd(n) vs
//       sigma_{2k}^odd(n/2)+sigma_{2k-1}^odd(n/2)
struct ShadowReport {
    uint64_t n = 0;
    std::vector<ShadowInequalityRow> family1;
    std::vector<ShadowInequalityRow> family2;
    bool ok = true;
};
ShadowReport verify_shadow_inequalities(uint64_t n, const WeightCounters& counters);

// Truncated alternating sum sum_{j>=k} (-1)^{j-k} (f_j - beta_j) over Delta_n
// data; equals sigma_k^odd(floor(n/2)) and both evaluations are compared.
// Throws std::logic_error if they disagree.
int64_t chi_truncated(uint64_t n, unsigned k, const WeightCounters& counters);

// The f-vector/Betti-number relations on Delta_n data for all k >= 1:
//   lower shadow of (chi_k + beta_k)        <= chi_{k-1}
//   upper shadow of (f_{2k+1} + beta_{2k})  <= f_{2k-1} - beta_{2k-1}
// together with the closed-form reductions of each side to sigma^odd counts.
struct FBetaRow {
    unsigned k = 0;
    ShadowInequalityRow lower;  // first relation
    ShadowInequalityRow upper;  // second relation
    bool reductions_ok = true;
};
struct FBetaReport {
    uint64_t n = 0;
    std::vector<FBetaRow> rows;
    bool ok = true;
};
FBetaReport verify_fbeta_relations(uint64_t n, const WeightCounters& counters);

}  // namespace divtop
