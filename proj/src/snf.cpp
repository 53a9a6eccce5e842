#include "divtop/snf.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace divtop {

namespace {

// Working form: rows as ordered column->value maps plus, per column, the set
// of rows holding a nonzero entry there.
struct Workspace {
    std::vector<std::map<uint32_t, BigInt>> rows;
    std::vector<std::set<uint32_t>> col_rows;
    std::vector<char> row_active, col_active;

    explicit Workspace(const SparseIntMatrix& m)
        : rows(m.rows), col_rows(m.cols), row_active(m.rows, 1), col_active(m.cols, 1) {
        for (uint32_t c = 0; c < m.cols; c++)
            for (const auto& [r, v] : m.columns[c]) {
                rows[r][c] = v;
                col_rows[c].insert(r);
            }
    }

    // row[dst] -= q * row[src], maintaining the column index
    void add_multiple(uint32_t dst, uint32_t src, const BigInt& q) {
        if (q == 0) return;
        for (const auto& [c, v] : rows[src]) {
            auto it = rows[dst].find(c);
            if (it == rows[dst].end()) {
                rows[dst].emplace(c, -q * v);
                col_rows[c].insert(dst);
            } else {
                it->second -= q * v;
                if (it->second == 0) {
                    rows[dst].erase(it);
                    col_rows[c].erase(dst);
                }
            }
        }
    }

    void deactivate(uint32_t r, uint32_t c) {
        row_active[r] = 0;
        col_active[c] = 0;
        for (const auto& [cc, v] : rows[r]) col_rows[cc].erase(r);
        rows[r].clear();
    }
};

// Standard dense Smith reduction for whatever the sparse unit-pivot phase
// leaves behind; matrices here are tiny.
void dense_snf(std::vector<std::vector<BigInt>>& a, SnfSummary& out) {
    const size_t nr = a.size();
    const size_t nc = nr ? a[0].size() : 0;
    std::vector<BigInt> diag;
    size_t t = 0;
    while (t < nr && t < nc) {
        // find entry of smallest absolute value in the remaining block
        size_t pr = t, pc = t;
        BigInt best = 0;
        for (size_t i = t; i < nr; i++)
            for (size_t j = t; j < nc; j++)
                if (a[i][j] != 0 && (best == 0 || abs(a[i][j]) < best)) {
                    best = abs(a[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(a[t], a[pr]);
        for (size_t i = 0; i < nr; i++) std::swap(a[i][t], a[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < nr; i++) {
                if (a[i][t] == 0) continue;
                const BigInt q = a[i][t] / a[t][t];
                for (size_t j = t; j < nc; j++) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {  // remainder smaller than pivot; swap up
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < nc; j++) {
                if (a[t][j] == 0) continue;
                const BigInt q = a[t][j] / a[t][t];
                for (size_t i = t; i < nr; i++) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (size_t i = 0; i < nr; i++) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide every remaining entry; if not, fold the
                // offending row in and continue reducing
                for (size_t i = t + 1; i < nr && clean; i++)
                    for (size_t j = t + 1; j < nc && clean; j++)
                        if (a[i][j] % a[t][t] != 0) {
                            for (size_t jj = t; jj < nc; jj++) a[t][jj] += a[i][jj];
                            clean = false;
                        }
            }
        }
        diag.push_back(abs(a[t][t]));
        t++;
    }
    for (const auto& d : diag) {
        out.rank++;
        if (d > 1) out.nontrivial_factors.push_back(d);
    }
}

}  // namespace

SnfSummary smith_normal_form(const SparseIntMatrix& m) {
    SnfSummary out;
    if (m.rows == 0 || m.cols == 0) return out;
    Workspace w(m);

    // Unit-pivot phase: eliminate entries of absolute value 1, choosing the
    // pivot with the smallest Markowitz fill estimate.
    for (;;) {
        uint32_t best_r = 0, best_c = 0;
        uint64_t best_cost = UINT64_MAX;
        for (uint32_t r = 0; r < m.rows; r++) {
            if (!w.row_active[r]) continue;
            const uint64_t rn = w.rows[r].size();
            if (rn == 0) continue;
            for (const auto& [c, v] : w.rows[r]) {
                if (v != 1 && v != -1) continue;
                const uint64_t cost = (rn - 1) * (w.col_rows[c].size() - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_r = r;
                    best_c = c;
                    if (cost == 0) break;
                }
            }
            if (best_cost == 0) break;
        }
        if (best_cost == UINT64_MAX) break;

        const BigInt pivot = w.rows[best_r][best_c];
        const auto users = w.col_rows[best_c];  // copy; mutated during elimination
        for (uint32_t r : users) {
            if (r == best_r) continue;
            const BigInt q = w.rows[r][best_c] * pivot;  // pivot^2 = 1
            w.add_multiple(r, best_r, q);
        }
        w.deactivate(best_r, best_c);
        out.rank++;
    }

    // Collect the remainder (no +/-1 entries left) into a dense block.
    std::vector<uint32_t> rs, cs;
    for (uint32_t r = 0; r < m.rows; r++)
        if (w.row_active[r] && !w.rows[r].empty()) rs.push_back(r);
    std::vector<char> col_used(m.cols, 0);
    for (uint32_t r : rs)
        for (const auto& [c, v] : w.rows[r]) col_used[c] = 1;
    for (uint32_t c = 0; c < m.cols; c++)
        if (col_used[c]) cs.push_back(c);
    if (rs.empty()) return out;

    std::vector<std::vector<BigInt>> dense(rs.size(), std::vector<BigInt>(cs.size(), 0));
    std::map<uint32_t, size_t> cpos;
    for (size_t j = 0; j < cs.size(); j++) cpos[cs[j]] = j;
    for (size_t i = 0; i < rs.size(); i++)
        for (const auto& [c, v] : w.rows[rs[i]]) dense[i][cpos[c]] = v;
    dense_snf(dense, out);
    std::sort(out.nontrivial_factors.begin(), out.nontrivial_factors.end());
    return out;
}

}  // namespace divtop
