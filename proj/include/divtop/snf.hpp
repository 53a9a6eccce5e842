// Exact Smith-normal-form summary of sparse integer matrices: rank plus the
// nontrivial invariant factors. Elimination is fraction-free; unit pivots are
// consumed first with fill-minimizing selection and whatever remains goes
// through a dense reduction in arbitrary precision.

#pragma once

#include <cstdint>
#include <vector>

#include "divtop/sieve.hpp"

namespace divtop {

struct SparseIntMatrix {
    uint32_t rows = 0;
    uint32_t cols = 0;
    // columns[c] = list of (row, entry), rows strictly increasing
    std::vector<std::vector<std::pair<uint32_t, int32_t>>> columns;
};

struct SnfSummary {
    size_t rank = 0;
    std::vector<BigInt> nontrivial_factors;  // invariant factors with |d| > 1
};

SnfSummary smith_normal_form(const SparseIntMatrix& m);

}  // namespace divtop
