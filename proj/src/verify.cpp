#include "divtop/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "divtop/betti.hpp"
#include "divtop/complex.hpp"
#include "divtop/shadow.hpp"

namespace divtop {

std::string SweepResult::summary() const {
    std::ostringstream out;
    out << suite << ": " << (ok() ? "PASS" : "FAIL") << " (checked " << checked
        << " values up to n = " << max_n << ", violations = " << violations << ")";
    return out.str();
}

namespace {

struct Failure {
    uint64_t n;
    std::string text;
    bool operator<(const Failure& o) const { return n < o.n || (n == o.n && text < o.text); }
};

// Runs check(n) for n = 1..max_n, collecting failure strings. check returns
// an empty string when the identity holds at n.
SweepResult run_sweep(const std::string& suite, uint64_t max_n, int threads,
                      size_t max_failures,
                      const std::function<std::string(uint64_t)>& check) {
    SweepResult res;
    res.suite = suite;
    res.max_n = max_n;
    std::vector<Failure> failures;
    uint64_t violations = 0;

    if (threads == 1) {
        for (uint64_t n = 1; n <= max_n; n++) {
            std::string f = check(n);
            if (!f.empty()) {
                violations++;
                failures.push_back({n, std::move(f)});
            }
        }
    } else {
        const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
        {
            std::vector<Failure> local;
            uint64_t local_violations = 0;
#pragma omp for schedule(dynamic, 16)
            for (uint64_t n = 1; n <= max_n; n++) {
                std::string f = check(n);
                if (!f.empty()) {
                    local_violations++;
                    local.push_back({n, std::move(f)});
                }
            }
#pragma omp critical
            {
                violations += local_violations;
                failures.insert(failures.end(), local.begin(), local.end());
            }
        }
    }

    std::sort(failures.begin(), failures.end());
    res.checked = max_n;
    res.violations = violations;
    for (size_t i = 0; i < failures.size() && i < max_failures; i++)
        res.failures.push_back(std::move(failures[i].text));
    return res;
}

std::string betti_mismatch(const char* what, uint64_t n, const BettiVector& a,
                           const BettiVector& b) {
    std::ostringstream out;
    out << what << " mismatch at n=" << n << ":";
    int lo = 1, hi = -1;
    if (!a.values().empty()) {
        lo = std::min(lo, a.values().begin()->first);
        hi = std::max(hi, a.values().rbegin()->first);
    }
    if (!b.values().empty()) {
        lo = std::min(lo, b.values().begin()->first);
        hi = std::max(hi, b.values().rbegin()->first);
    }
    for (int k = lo; k <= hi; k++)
        if (a.get(k) != b.get(k))
            out << " k=" << k << " lhs=" << a.get(k) << " rhs=" << b.get(k);
    return out.str();
}

}  // namespace

SweepResult sweep_homology(const SieveTable& table, const WeightCounters& counters,
                           const SweepOptions& opt) {
    return run_sweep("homology", opt.max_n, opt.threads, opt.max_failures_reported,
                     [&](uint64_t n) -> std::string {
                         const BettiVector formula = betti_delta(n, counters);
                         const BettiVector count = betti_delta_shifted_count(n, table);
                         if (!formula.same_values(count))
                             return betti_mismatch("formula/shifted-count", n, formula,
                                                   count);
                         const auto complex = build_delta_complex(n, table, opt.face_cap);
                         const HomologyResult hom = homology_betti(complex);
                         if (!formula.same_values(hom.betti))
                             return betti_mismatch("formula/homology", n, formula,
                                                   hom.betti);
                         if (!hom.torsion.empty()) {
                             std::ostringstream out;
                             out << "torsion at n=" << n << " in degrees:";
                             for (const auto& [deg, f] : hom.torsion.by_degree)
                                 out << ' ' << deg << " (" << f.size() << " factors)";
                             return out.str();
                         }
                         return {};
                     });
}

SweepResult sweep_shifted(const SieveTable& table, const SweepOptions& opt) {
    return run_sweep("shifted", opt.max_n, opt.threads, opt.max_failures_reported,
                     [&](uint64_t n) -> std::string {
                         const auto complex = build_delta_complex(n, table, opt.face_cap);
                         if (!verify_shifted(complex)) {
                             std::ostringstream out;
                             out << "complex at n=" << n << " is not shifted";
                             return out.str();
                         }
                         return {};
                     });
}

SweepResult sweep_euler(const SieveTable& table, const WeightCounters& counters,
                        const SummatoryTables& summ, const SweepOptions& opt) {
    // Alternating Betti sums of Delta_m for every m, shared by the wedge
    // splitting below; plus the incremental cell-census Euler characteristic.
    std::vector<int64_t> delta_alt(opt.max_n + 1, 0);
    std::vector<int64_t> census_chi(opt.max_n + 1, 0);
    for (uint64_t m = 1; m <= opt.max_n; m++) {
        delta_alt[m] = betti_delta(m, counters).alternating_sum(-1);
        census_chi[m] = census_chi[m - 1] + ((table.omega(m) & 1) ? 1 : -1);
    }
    return run_sweep(
        "euler", opt.max_n, opt.threads, opt.max_failures_reported,
        [&](uint64_t n) -> std::string {
            std::ostringstream out;
            const int64_t m_direct = mertens(summ, n);
            if (delta_alt[n] != m_direct)
                out << "delta euler at n=" << n << ": betti sum " << delta_alt[n]
                    << " != M(n) " << m_direct << "; ";
            int64_t tilde_alt = 0;
            for (uint64_t r = 1; r * r <= n; r++) tilde_alt += delta_alt[n / (r * r)];
            const int64_t l_direct = liouville_summatory(summ, n);
            if (tilde_alt != l_direct)
                out << "cell-complex euler at n=" << n << ": betti sum " << tilde_alt
                    << " != L(n) " << l_direct << "; ";
            if (census_chi[n] != -l_direct)
                out << "cell census at n=" << n << ": chi " << census_chi[n]
                    << " != -L(n) " << -l_direct << "; ";
            return out.str();
        });
}

SweepResult sweep_inversion(const SieveTable& table, const SummatoryTables& summ,
                            const SweepOptions& opt) {
    return run_sweep("inversion", opt.max_n, opt.threads, opt.max_failures_reported,
                     [&](uint64_t n) -> std::string {
                         const InversionPair p = mobius_inversion_pair(n, table, summ);
                         const int64_t l = liouville_summatory(summ, n);
                         const int64_t m = mertens(summ, n);
                         if (p.liouville_from_mertens == l && p.mertens_from_liouville == m)
                             return {};
                         std::ostringstream out;
                         out << "inversion at n=" << n << ": L-from-M "
                             << p.liouville_from_mertens << " vs L " << l << ", M-from-L "
                             << p.mertens_from_liouville << " vs M " << m;
                         return out.str();
                     });
}

SweepResult sweep_sigma_lemmas(const WeightCounters& counters, const SweepOptions& opt) {
    const int maxw = counters.max_weight();
    return run_sweep(
        "sigma-lemmas", opt.max_n, opt.threads, opt.max_failures_reported,
        [&, maxw](uint64_t x) -> std::string {
            std::ostringstream out;
            const uint64_t half = x / 2;
            for (int k = 1; k <= maxw + 1; k++)
                if (counters.sigma_k_even(k, x) != counters.sigma_k_odd(k - 1, half))
                    out << "even/odd halving at x=" << x << " k=" << k << ": "
                        << counters.sigma_k_even(k, x) << " != "
                        << counters.sigma_k_odd(k - 1, half) << "; ";
            for (int k = 0; k <= maxw; k++) {
                int64_t alt = 0;
                uint64_t arg = x;
                for (int i = 0; i <= k && arg >= 1; i++, arg /= 2)
                    alt += (i & 1) ? -counters.sigma_k(k - i, arg)
                                   : counters.sigma_k(k - i, arg);
                if (alt != counters.sigma_k_odd(k, x))
                    out << "per-weight alternating identity at x=" << x << " k=" << k
                        << ": " << alt << " != " << counters.sigma_k_odd(k, x) << "; ";
            }
            int64_t alt = 0;
            int i = 0;
            for (uint64_t arg = x; arg >= 1; arg /= 2, i++)
                alt += (i & 1) ? -counters.sigma(arg) : counters.sigma(arg);
            if (alt != counters.sigma_odd(x))
                out << "aggregate alternating identity at x=" << x << ": " << alt
                    << " != " << counters.sigma_odd(x) << "; ";
            return out.str();
        });
}

SweepResult sweep_shadow(const WeightCounters& counters, const SweepOptions& opt) {
    const uint64_t fbeta_max = std::min<uint64_t>(opt.max_n, 5000);
    return run_sweep(
        "shadow", opt.max_n, opt.threads, opt.max_failures_reported,
        [&, fbeta_max](uint64_t n) -> std::string {
            std::ostringstream out;
            const ShadowReport rep = verify_shadow_inequalities(n, counters);
            if (!rep.ok) {
                for (const auto& r : rep.family1)
                    if (!r.ok())
                        out << "lower-shadow inequality at n=" << n << " k=" << r.k
                            << ": " << r.lhs << " > " << r.rhs << "; ";
                for (const auto& r : rep.family2)
                    if (!r.ok())
                        out << "upper-shadow inequality at n=" << n << " k=" << r.k
                            << ": " << r.lhs << " > " << r.rhs << "; ";
            }
            if (n <= fbeta_max) {
                try {
                    const FBetaReport fb = verify_fbeta_relations(n, counters);
                    if (!fb.ok)
                        for (const auto& row : fb.rows) {
                            if (!row.lower.ok())
                                out << "f/beta lower relation at n=" << n
                                    << " k=" << row.k << ": " << row.lower.lhs << " > "
                                    << row.lower.rhs << "; ";
                            if (!row.upper.ok())
                                out << "f/beta upper relation at n=" << n
                                    << " k=" << row.k << ": " << row.upper.lhs << " > "
                                    << row.upper.rhs << "; ";
                            if (!row.reductions_ok)
                                out << "f/beta closed-form reduction failed at n=" << n
                                    << " k=" << row.k << "; ";
                        }
                } catch (const std::logic_error& e) {
                    out << e.what() << "; ";  // chi dual evaluation mismatch
                }
            }
            return out.str();
        });
}

SweepResult sweep_multicomplex(const SieveTable& table, const WeightCounters& counters,
                               const SweepOptions& opt) {
    const uint64_t max_n = std::min<uint64_t>(opt.max_n, 500);
    SweepOptions capped = opt;
    capped.max_n = max_n;
    return run_sweep("multicomplex", max_n, capped.threads, capped.max_failures_reported,
                     [&](uint64_t n) -> std::string {
                         const auto mc = build_divisor_multicomplex(n, table);
                         const HomologyResult oracle = multicomplex_betti(mc, opt.face_cap);
                         const BettiVector formula = betti_delta_tilde(n, table, counters);
                         if (!oracle.betti.same_values(formula))
                             return betti_mismatch("multicomplex/wedge-formula", n,
                                                   oracle.betti, formula);
                         if (!oracle.torsion.empty()) {
                             std::ostringstream out;
                             out << "multicomplex torsion at n=" << n;
                             return out.str();
                         }
                         return {};
                     });
}

}  // namespace divtop
