#include "divtop/complex.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace divtop {

size_t FaceHash::operator()(const Face& f) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t v : f) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
}

SimplicialComplexModel SimplicialComplexModel::from_faces(uint64_t n,
                                                          std::vector<Face> faces) {
    SimplicialComplexModel c;
    c.n_ = n;
    int dim = -1;
    for (const auto& f : faces) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    c.by_dim_.assign(dim + 2, {});
    for (auto& f : faces) {
        const int d = static_cast<int>(f.size()) - 1;
        for (uint32_t v : f) c.vertex_count_ = std::max<size_t>(c.vertex_count_, v);
        c.by_dim_[d + 1].push_back(std::move(f));
    }
    bool has_empty = false;
    for (auto& level : c.by_dim_) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        for (const auto& f : level) {
            c.face_set_.insert(f);
            if (f.empty()) has_empty = true;
        }
    }
    if (!has_empty)
        throw std::invalid_argument("SimplicialComplexModel: the empty face is required");
    // downward closure
    for (int d = 1; d <= c.dim(); d++)
        for (const auto& f : c.by_dim_[d + 1])
            for (size_t i = 0; i < f.size(); i++) {
                Face g;
                g.reserve(f.size() - 1);
                for (size_t t = 0; t < f.size(); t++)
                    if (t != i) g.push_back(f[t]);
                if (!c.face_set_.count(g))
                    throw std::invalid_argument(
                        "SimplicialComplexModel: not downward closed");
            }
    return c;
}

SimplicialComplexModel build_delta_complex(uint64_t n, const SieveTable& table,
                                           uint64_t face_cap) {
    if (n > table.limit())
        throw std::out_of_range("build_delta_complex: n exceeds sieve limit");
    // prime index map: p_1 = 2, p_2 = 3, ...
    std::vector<uint32_t> prime_index(n + 1, 0);
    uint32_t np = 0;
    for (uint64_t p = 2; p <= n; p++)
        if (table.is_prime(p)) prime_index[p] = ++np;

    std::vector<Face> faces;
    uint64_t count = 0;
    for (uint64_t k = 1; k <= n; k++) {
        if (!table.squarefree(k)) continue;
        if (++count > face_cap)
            throw std::length_error("build_delta_complex: face count exceeds cap " +
                                    std::to_string(face_cap));
        Face f;
        uint64_t m = k;
        while (m > 1) {
            const uint32_t p = table.lpf(m);
            f.push_back(prime_index[p]);
            while (m % p == 0) m /= p;
        }
        faces.push_back(std::move(f));  // lpf order is already ascending
    }
    return SimplicialComplexModel::from_faces(n, std::move(faces));
}

bool verify_shifted(const SimplicialComplexModel& c) {
    for (int d = 0; d <= c.dim(); d++)
        for (const auto& f : c.faces(d))
            for (size_t t = 0; t < f.size(); t++) {
                Face g = f;
                for (uint32_t i = 1; i < f[t]; i++) {
                    if (std::binary_search(f.begin(), f.end(), i)) continue;
                    g[t] = i;
                    Face sorted = g;
                    std::sort(sorted.begin(), sorted.end());
                    if (!c.contains(sorted)) return false;
                }
                g[t] = f[t];
            }
    return true;
}

BoundaryMatrixSet build_boundary_matrices(const SimplicialComplexModel& c) {
    BoundaryMatrixSet set;
    std::map<Face, uint32_t> index_prev;  // faces of dimension j-1
    index_prev[{}] = 0;
    for (int j = 0; j <= c.dim(); j++) {
        const auto& level = c.faces(j);
        SparseIntMatrix m;
        m.rows = j == 0 ? 1 : static_cast<uint32_t>(c.faces(j - 1).size());
        m.cols = static_cast<uint32_t>(level.size());
        m.columns.resize(m.cols);
        for (uint32_t ci = 0; ci < m.cols; ci++) {
            const Face& f = level[ci];
            for (size_t t = 0; t < f.size(); t++) {
                Face g;
                g.reserve(f.size() - 1);
                for (size_t u = 0; u < f.size(); u++)
                    if (u != t) g.push_back(f[u]);
                m.columns[ci].emplace_back(index_prev.at(g), (t & 1) ? -1 : 1);
            }
            std::sort(m.columns[ci].begin(), m.columns[ci].end());
        }
        set.boundary.push_back(std::move(m));
        index_prev.clear();
        for (uint32_t i = 0; i < level.size(); i++) index_prev[level[i]] = i;
    }
    return set;
}

bool BoundaryMatrixSet::composites_vanish() const {
    for (size_t j = 1; j < boundary.size(); j++) {
        const auto& a = boundary[j - 1];  // C_{j-1} -> C_{j-2}
        const auto& b = boundary[j];      // C_j -> C_{j-1}
        for (uint32_t c = 0; c < b.cols; c++) {
            std::map<uint32_t, int64_t> acc;
            for (const auto& [mid, vb] : b.columns[c])
                for (const auto& [row, va] : a.columns[mid]) acc[row] += int64_t(va) * vb;
            for (const auto& [row, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

HomologyResult homology_betti(const SimplicialComplexModel& c) {
    const BoundaryMatrixSet set = build_boundary_matrices(c);
    std::vector<size_t> rank(c.dim() + 2, 0);  // rank[j+...]: rank of boundary_j
    HomologyResult out;
    out.betti = BettiVector(c.n(), BettiMethod::HomologyOracle);
    for (int j = 0; j <= c.dim(); j++) {
        const SnfSummary s = smith_normal_form(set.boundary[j]);
        rank[j] = s.rank;
        if (!s.nontrivial_factors.empty())
            out.torsion.by_degree[j - 1] = s.nontrivial_factors;
    }
    for (int k = -1; k <= c.dim(); k++) {
        const int64_t chains = k == -1 ? 1 : c.f(k);
        const int64_t r_k = k == -1 ? 0 : static_cast<int64_t>(rank[k]);
        const int64_t r_k1 = k + 1 <= c.dim() ? static_cast<int64_t>(rank[k + 1]) : 0;
        out.betti.set(k, chains - r_k - r_k1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Multicomplexes

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : powers) d += e;
    return d;
}

bool Monomial::is_squarefree() const {
    for (const auto& [v, e] : powers)
        if (e > 1) return false;
    return true;
}

bool Monomial::is_full_square() const {
    for (const auto& [v, e] : powers)
        if (e & 1) return false;
    return true;
}

bool Monomial::divides(const Monomial& other) const {
    size_t i = 0;
    for (const auto& [v, e] : powers) {
        while (i < other.powers.size() && other.powers[i].first < v) i++;
        if (i >= other.powers.size() || other.powers[i].first != v ||
            other.powers[i].second < e)
            return false;
    }
    return true;
}

std::pair<Monomial, Monomial> Monomial::square_split() const {
    Monomial r, s;
    for (const auto& [v, e] : powers) {
        if (e / 2 > 0) r.powers.emplace_back(v, e / 2);
        if (e & 1) s.powers.emplace_back(v, 1);
    }
    return {r, s};
}

Face Monomial::support() const {
    Face f;
    f.reserve(powers.size());
    for (const auto& [v, e] : powers) f.push_back(v);
    return f;
}

bool Monomial::operator<(const Monomial& other) const {
    const unsigned da = degree(), db = other.degree();
    if (da != db) return da < db;
    return powers < other.powers;
}

std::string Monomial::to_string() const {
    if (powers.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : powers) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v) + "^" + std::to_string(e);
    }
    return s;
}

Monomial Monomial::parse(const std::string& line) {
    Monomial m;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;  // unit factor
        const auto caret = tok.find('^');
        if (caret == std::string::npos || caret == 0 || caret + 1 >= tok.size())
            throw std::invalid_argument("Monomial::parse: bad factor '" + tok + "'");
        const unsigned long v = std::stoul(tok.substr(0, caret));
        const unsigned long e = std::stoul(tok.substr(caret + 1));
        if (v == 0 || e == 0)
            throw std::invalid_argument("Monomial::parse: bad factor '" + tok + "'");
        m.powers.emplace_back(static_cast<uint32_t>(v), static_cast<uint32_t>(e));
    }
    std::sort(m.powers.begin(), m.powers.end());
    for (size_t i = 1; i < m.powers.size(); i++)
        if (m.powers[i].first == m.powers[i - 1].first)
            throw std::invalid_argument("Monomial::parse: repeated variable in '" + line +
                                        "'");
    return m;
}

MulticomplexModel MulticomplexModel::from_monomials(std::vector<Monomial> monomials) {
    MulticomplexModel m;
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    m.monomials_ = std::move(monomials);
    if (m.monomials_.empty() || !m.monomials_.front().is_unit())
        throw std::invalid_argument("MulticomplexModel: the unit monomial is required");
    // single-step divisors suffice for full divisibility closure
    for (const auto& mono : m.monomials_) {
        for (size_t i = 0; i < mono.powers.size(); i++) {
            Monomial div = mono;
            if (div.powers[i].second > 1)
                div.powers[i].second--;
            else
                div.powers.erase(div.powers.begin() + i);
            if (!m.contains(div))
                throw std::invalid_argument(
                    "MulticomplexModel: not closed under divisibility; missing " +
                    div.to_string());
        }
    }
    return m;
}

bool MulticomplexModel::contains(const Monomial& mono) const {
    return std::binary_search(monomials_.begin(), monomials_.end(), mono);
}

MulticomplexModel MulticomplexModel::parse(std::istream& in) {
    std::vector<Monomial> monos;
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        if (const auto hash = trimmed.find('#'); hash != std::string::npos)
            trimmed.resize(hash);
        if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
        monos.push_back(Monomial::parse(trimmed));
    }
    return from_monomials(std::move(monos));
}

MulticomplexModel MulticomplexModel::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("MulticomplexModel: cannot open " + path);
    return parse(in);
}

MulticomplexModel build_divisor_multicomplex(uint64_t n, const SieveTable& table) {
    if (n < 1 || n > table.limit())
        throw std::out_of_range("build_divisor_multicomplex: n out of range");
    std::vector<uint32_t> prime_index(n + 1, 0);
    uint32_t np = 0;
    for (uint64_t p = 2; p <= n; p++)
        if (table.is_prime(p)) prime_index[p] = ++np;

    std::vector<Monomial> monos;
    monos.reserve(n);
    for (uint64_t k = 1; k <= n; k++) {
        Monomial mono;
        uint64_t m = k;
        while (m > 1) {
            const uint32_t p = table.lpf(m);
            uint32_t e = 0;
            while (m % p == 0) {
                m /= p;
                e++;
            }
            mono.powers.emplace_back(prime_index[p], e);
        }
        monos.push_back(std::move(mono));
    }
    return MulticomplexModel::from_monomials(std::move(monos));
}

HomologyResult multicomplex_betti(const MulticomplexModel& m, uint64_t face_cap) {
    // group squarefree parts by the square root of the square part
    std::map<Monomial, std::vector<Face>> pieces;
    for (const auto& mono : m.monomials()) {
        auto [r, s] = mono.square_split();
        pieces[r].push_back(s.support());
    }
    HomologyResult out;
    out.betti = BettiVector(0, BettiMethod::HomologyOracle);
    for (auto& [r, faces] : pieces) {
        if (faces.size() > face_cap)
            throw std::length_error("multicomplex_betti: piece exceeds face cap");
        const auto piece = SimplicialComplexModel::from_faces(0, std::move(faces));
        const HomologyResult h = homology_betti(piece);
        const int shift = 2 * static_cast<int>(r.degree());
        for (const auto& [k, v] : h.betti.values()) out.betti.add(k + shift, v);
        for (const auto& [deg, factors] : h.torsion.by_degree) {
            auto& dst = out.torsion.by_degree[deg + shift];
            dst.insert(dst.end(), factors.begin(), factors.end());
        }
    }
    return out;
}

CellCensus cell_census(uint64_t n, const SieveTable& table) {
    if (n < 1 || n > table.limit())
        throw std::out_of_range("cell_census: n out of range");
    CellCensus out;
    out.n = n;
    for (uint64_t k = 1; k <= n; k++) {
        const int dim = static_cast<int>(table.omega(k)) - 1;
        out.count_by_dim[dim]++;
        out.reduced_euler += (dim & 1) ? -1 : 1;
    }
    return out;
}

}  // namespace divtop
