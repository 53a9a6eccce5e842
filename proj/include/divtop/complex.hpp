// Explicit models of the squarefree divisor complex and of generic
// multicomplexes, with exact integer homology through Smith normal form.
// This is the oracle side of the library: it never consults the counting
// formulas it is used to check.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "divtop/betti.hpp"
#include "divtop/sieve.hpp"
#include "divtop/snf.hpp"

namespace divtop {

inline constexpr uint64_t kDefaultFaceCap = 100'000;

// A face is a sorted list of 1-based vertex ids (prime indices: p_1 = 2).
using Face = std::vector<uint32_t>;

struct FaceHash {
    size_t operator()(const Face& f) const;
};

class SimplicialComplexModel {
public:
    // Faces must be downward closed and include the empty face.
    static SimplicialComplexModel from_faces(uint64_t n, std::vector<Face> faces);

    uint64_t n() const { return n_; }
    int dim() const { return static_cast<int>(by_dim_.size()) - 2; }
    size_t face_count() const { return face_set_.size(); }
    size_t vertex_count() const { return vertex_count_; }
    // d in [-1, dim]; faces are sorted lexicographically within a dimension
    const std::vector<Face>& faces(int d) const { return by_dim_[d + 1]; }
    bool contains(const Face& f) const { return face_set_.count(f) > 0; }
    int64_t f(int j) const {
        return (j < -1 || j > dim()) ? 0 : static_cast<int64_t>(by_dim_[j + 1].size());
    }

private:
    uint64_t n_ = 0;
    size_t vertex_count_ = 0;
    std::vector<std::vector<Face>> by_dim_;  // by_dim_[d + 1]
    std::unordered_set<Face, FaceHash> face_set_;
};

// Delta_n = {P(k) : k squarefree, k <= n} with P(k) the prime support of k.
// Throws std::length_error when sigma(n) exceeds face_cap.
SimplicialComplexModel build_delta_complex(uint64_t n, const SieveTable& table,
                                           uint64_t face_cap = kDefaultFaceCap);

// True iff for every face F, every j in F and every vertex i < j not in F,
// the swap F \ {j} u {i} is again a face.
bool verify_shifted(const SimplicialComplexModel& c);

// boundary[j]: C_j -> C_{j-1} over the augmented chain complex, j = 0..dim;
// the empty face spans C_{-1}, so reduced homology is uniform from k = -1.
struct BoundaryMatrixSet {
    std::vector<SparseIntMatrix> boundary;
    bool composites_vanish() const;  // boundary_{j-1} o boundary_j = 0
};
BoundaryMatrixSet build_boundary_matrices(const SimplicialComplexModel& c);

struct TorsionReport {
    std::map<int, std::vector<BigInt>> by_degree;  // homology degree -> factors
    bool empty() const { return by_degree.empty(); }
};
struct HomologyResult {
    BettiVector betti;
    TorsionReport torsion;
};

// Reduced Betti numbers over the integers via Smith normal form.
HomologyResult homology_betti(const SimplicialComplexModel& c);

// ---------------------------------------------------------------------------
// Multicomplexes

struct Monomial {
    // (variable id >= 1, exponent >= 1), strictly increasing variable ids;
    // empty list is the unit monomial.
    std::vector<std::pair<uint32_t, uint32_t>> powers;

    unsigned degree() const;
    bool is_unit() const { return powers.empty(); }
    bool is_squarefree() const;
    bool is_full_square() const;  // all exponents even
    bool divides(const Monomial& other) const;
    // m = r^2 s with s squarefree; returns (r, s)
    std::pair<Monomial, Monomial> square_split() const;
    Face support() const;

    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial&) const;

    std::string to_string() const;           // "1" or e.g. "1^2 3^1"
    static Monomial parse(const std::string& line);
};

class MulticomplexModel {
public:
    // Validates closure under divisibility; throws std::invalid_argument
    // naming a missing divisor otherwise.
    static MulticomplexModel from_monomials(std::vector<Monomial> monomials);
    // One monomial per line, `i^e` factors space-separated, `1` for the unit.
    static MulticomplexModel parse(std::istream& in);
    static MulticomplexModel from_file(const std::string& path);

    const std::vector<Monomial>& monomials() const { return monomials_; }
    bool contains(const Monomial& m) const;
    size_t size() const { return monomials_.size(); }

private:
    std::vector<Monomial> monomials_;  // sorted, unique
};

// Exponent vectors of all integers 1..n under p_i <-> x_i.
MulticomplexModel build_divisor_multicomplex(uint64_t n, const SieveTable& table);

// Homology of the cellular realization via the wedge splitting over full
// squares: beta_k = sum_{r^2 in M} beta_{k-2deg(r)} of the simplicial complex
// M_{r^2} = {squarefree s : r^2 s in M}, each piece computed by the SNF
// oracle.
HomologyResult multicomplex_betti(const MulticomplexModel& m,
                                  uint64_t face_cap = kDefaultFaceCap);

// Cells of the divisor cell complex by dimension (dim c(k) = Omega(k) - 1,
// so k = 1 is the empty cell) and their reduced alternating sum.
struct CellCensus {
    uint64_t n = 0;
    std::map<int, int64_t> count_by_dim;
    int64_t reduced_euler = 0;  // sum (-1)^dim over all cells, empty included
};
CellCensus cell_census(uint64_t n, const SieveTable& table);

}  // namespace divtop
