#pragma once

#include "dsg/sfs.hpp"
#include "dsg/surgery.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace dsg {

// One piece of evidence attached to a distance bound.
struct BoundWitness {
    enum class Kind { p_rank_gap, betti_gap, slope_diff };
    Kind kind;
    Int prime;        // meaningful for p_rank_gap
    long long value;  // the gap / surgery count realising the bound

    std::string str() const {
        switch (kind) {
            case Kind::p_rank_gap:
                return "p-rank gap " + std::to_string(value) + " at p=" + prime.str();
            case Kind::betti_gap:
                return "betti gap " + std::to_string(value);
            case Kind::slope_diff:
                return std::to_string(value) + " slope changes";
        }
        return "";
    }
};

// Lower/upper bounds on the Lickorish path length between two manifolds.
// `upper` is empty when no common surgery presentation is known.
struct DistanceBound {
    long long lower{0};
    std::optional<long long> upper;
    std::vector<BoundWitness> witnesses;
};

// Lower bound on p_L from homology: a single surgery changes each p-rank and
// the first Betti number by at most one, so any gap forces that many edges.
inline long long lower_bound(const AbelianGroup& g1, const AbelianGroup& g2,
                             std::vector<BoundWitness>* witnesses = nullptr) {
    long long best = betti(g1) >= betti(g2) ? betti(g1) - betti(g2) : betti(g2) - betti(g1);
    BoundWitness w{BoundWitness::Kind::betti_gap, 0, best};
    std::vector<Int> primes = support_primes(g1);
    for (const Int& p : support_primes(g2))
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    for (const Int& p : primes) {
        long long r1 = p_rank(g1, p), r2 = p_rank(g2, p);
        long long gap = r1 >= r2 ? r1 - r2 : r2 - r1;
        if (gap > best) {
            best = gap;
            w = BoundWitness{BoundWitness::Kind::p_rank_gap, p, gap};
        }
    }
    if (witnesses) witnesses->push_back(w);
    return best;
}

// Upper bound for two surgery descriptions of the same link: every component
// whose slope differs is one surgery edge.
inline long long upper_bound_slope_diff(const SurgeryDescription& d1, const SurgeryDescription& d2) {
    if (!d1.same_link(d2))
        throw domain_error("incomparable descriptions: different underlying links");
    long long count = 0;
    for (std::size_t i = 0; i < d1.components(); ++i)
        if (d1.slopes[i] != d2.slopes[i]) ++count;
    return count;
}

inline DistanceBound distance_bound(const SurgeryDescription& d1, const SurgeryDescription& d2) {
    DistanceBound b;
    b.lower = lower_bound(homology(d1), homology(d2), &b.witnesses);
    if (d1.same_link(d2)) {
        b.upper = upper_bound_slope_diff(d1, d2);
        b.witnesses.push_back(BoundWitness{BoundWitness::Kind::slope_diff, 0, *b.upper});
    }
    return b;
}

// Distance-bound table over the grid [0,N]^k of flat-family surgery
// descriptions. Homology is computed per grid point through the full
// presentation-matrix / Smith-normal-form path; pair bounds are derived on
// demand so tables stay small even for large grids.
class GridTable {
public:
    GridTable(std::size_t k, std::size_t blocksize, std::vector<Int> primes, long long n,
              Int myers_qprime = 0)
        : k_(k), blocksize_(blocksize), primes_(std::move(primes)), radius_(n),
          myers_qprime_(std::move(myers_qprime)) {
        if (n < 0) throw domain_error("grid radius must be >= 0");
        if (n > static_cast<long long>(blocksize))
            throw domain_error("grid radius exceeds block size");
        enumerate_points({});
        groups_.reserve(points_.size());
        descriptions_.reserve(points_.size());
        for (const GridPoint& pt : points_) {
            SurgeryDescription d = family_flat(k_, blocksize_, primes_, pt);
            if (myers_qprime_ != 0) d = family_myers(d.slopes, myers_qprime_);
            groups_.push_back(homology(d));
            descriptions_.push_back(std::move(d));
        }
        // Per-point caches so pair bounds over large grids stay cheap. The
        // torsion of every grid group divides a product of the table primes,
        // so these ranks cover the whole support.
        ranks_.resize(points_.size());
        betti_.resize(points_.size());
        slope_ids_.resize(points_.size());
        for (std::size_t i = 0; i < points_.size(); ++i) {
            for (const Int& p : primes_) ranks_[i].push_back(p_rank(groups_[i], p));
            betti_[i] = betti(groups_[i]);
            slope_ids_[i] = intern_slopes(descriptions_[i]);
        }
    }

    std::size_t size() const { return points_.size(); }
    std::size_t dim() const { return k_; }
    const std::vector<GridPoint>& points() const { return points_; }
    const GridPoint& point(std::size_t i) const { return points_[i]; }
    const AbelianGroup& group(std::size_t i) const { return groups_[i]; }
    const SurgeryDescription& description(std::size_t i) const { return descriptions_[i]; }

    long long l1(std::size_t i, std::size_t j) const {
        return points_[i].l1_distance(points_[j]);
    }

    DistanceBound bound(std::size_t i, std::size_t j) const {
        DistanceBound b;
        long long best = betti_[i] >= betti_[j] ? betti_[i] - betti_[j] : betti_[j] - betti_[i];
        BoundWitness w{BoundWitness::Kind::betti_gap, 0, best};
        for (std::size_t p = 0; p < primes_.size(); ++p) {
            long long gap = ranks_[i][p] >= ranks_[j][p] ? ranks_[i][p] - ranks_[j][p]
                                                         : ranks_[j][p] - ranks_[i][p];
            if (gap > best) {
                best = gap;
                w = BoundWitness{BoundWitness::Kind::p_rank_gap, primes_[p], gap};
            }
        }
        b.lower = best;
        b.witnesses.push_back(w);

        long long diff = 0;
        const auto& si = slope_ids_[i];
        const auto& sj = slope_ids_[j];
        for (std::size_t c = 0; c < si.size(); ++c)
            if (si[c] != sj[c]) ++diff;
        b.upper = diff;
        b.witnesses.push_back(BoundWitness{BoundWitness::Kind::slope_diff, 0, diff});
        return b;
    }

    // Allocation-free variant of bound() for tight certification loops.
    std::pair<long long, long long> bounds_compact(std::size_t i, std::size_t j) const {
        long long best = betti_[i] >= betti_[j] ? betti_[i] - betti_[j] : betti_[j] - betti_[i];
        for (std::size_t p = 0; p < primes_.size(); ++p) {
            long long gap = ranks_[i][p] >= ranks_[j][p] ? ranks_[i][p] - ranks_[j][p]
                                                         : ranks_[j][p] - ranks_[i][p];
            if (gap > best) best = gap;
        }
        long long diff = 0;
        const auto& si = slope_ids_[i];
        const auto& sj = slope_ids_[j];
        for (std::size_t c = 0; c < si.size(); ++c)
            if (si[c] != sj[c]) ++diff;
        return {best, diff};
    }

private:
    void enumerate_points(std::vector<long long> prefix) {
        if (prefix.size() == k_) {
            points_.emplace_back(prefix);
            return;
        }
        for (long long c = 0; c <= radius_; ++c) {
            prefix.push_back(c);
            enumerate_points(prefix);
            prefix.pop_back();
        }
    }

    std::vector<std::int32_t> intern_slopes(const SurgeryDescription& d) {
        std::vector<std::int32_t> ids;
        ids.reserve(d.components());
        for (const RationalSlope& s : d.slopes) {
            std::int32_t id = -1;
            for (std::size_t t = 0; t < distinct_slopes_.size(); ++t)
                if (distinct_slopes_[t] == s) {
                    id = static_cast<std::int32_t>(t);
                    break;
                }
            if (id < 0) {
                id = static_cast<std::int32_t>(distinct_slopes_.size());
                distinct_slopes_.push_back(s);
            }
            ids.push_back(id);
        }
        return ids;
    }

    std::size_t k_, blocksize_;
    std::vector<Int> primes_;
    long long radius_;
    Int myers_qprime_;
    std::vector<GridPoint> points_;
    std::vector<AbelianGroup> groups_;
    std::vector<SurgeryDescription> descriptions_;
    std::vector<std::vector<long long>> ranks_;
    std::vector<long long> betti_;
    std::vector<RationalSlope> distinct_slopes_;
    std::vector<std::vector<std::int32_t>> slope_ids_;
};

inline GridTable grid_distance_table(std::size_t k, std::size_t blocksize,
                                     const std::vector<Int>& primes, long long n,
                                     const Int& myers_qprime = 0) {
    return GridTable(k, blocksize, primes, n, myers_qprime);
}

// Quasi-flat certificate over a grid table: every pair must satisfy
// upper = L1 and lower >= L1 / (2k-1). The observed minimum of lower/L1 is
// the empirical bi-Lipschitz constant.
struct QuasiflatReport {
    bool pass{false};
    std::size_t k{0};
    std::size_t pairs_checked{0};
    // min of lower/L1 over pairs with L1 > 0, as an exact fraction
    long long min_ratio_num{1}, min_ratio_den{1};
    std::size_t worst_i{0}, worst_j{0};
    std::vector<std::string> violations;  // first few, for diagnostics

    double min_ratio() const {
        return static_cast<double>(min_ratio_num) / static_cast<double>(min_ratio_den);
    }
};

inline QuasiflatReport certify_quasiflat(const GridTable& table, unsigned threads = 1) {
    QuasiflatReport report;
    report.k = table.dim();
    const std::size_t n = table.size();
    const long long denom = 2 * static_cast<long long>(table.dim()) - 1;

    struct Partial {
        bool have_ratio = false;
        long long num = 1, den = 1;
        std::size_t wi = 0, wj = 0;
        std::size_t pairs = 0;
        std::vector<std::string> violations;
    };

    auto work = [&](std::size_t first, std::size_t stride, Partial& out) {
        for (std::size_t i = first; i < n; i += stride) {
            for (std::size_t j = i; j < n; ++j) {
                auto [lower, upper] = table.bounds_compact(i, j);
                long long l1 = table.l1(i, j);
                ++out.pairs;
                if (upper != l1 && out.violations.size() < 8)
                    out.violations.push_back("upper != L1 at " + table.point(i).str() + " vs " +
                                             table.point(j).str());
                if (lower * denom < l1 && out.violations.size() < 8)
                    out.violations.push_back("lower < L1/" + std::to_string(denom) + " at " +
                                             table.point(i).str() + " vs " + table.point(j).str());
                if (l1 > 0) {
                    // lower/l1 < num/den ?
                    if (!out.have_ratio || lower * out.den < out.num * l1) {
                        out.have_ratio = true;
                        out.num = lower;
                        out.den = l1;
                        out.wi = i;
                        out.wj = j;
                    }
                }
            }
        }
    };

    unsigned nthreads = std::max(1u, threads);
    std::vector<Partial> parts(nthreads);
    if (nthreads == 1) {
        work(0, 1, parts[0]);
    } else {
        // strided rows so the triangular workload balances
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back(work, t, nthreads, std::ref(parts[t]));
        for (auto& th : pool) th.join();
    }

    bool have = false;
    for (const Partial& p : parts) {
        report.pairs_checked += p.pairs;
        for (const std::string& v : p.violations)
            if (report.violations.size() < 8) report.violations.push_back(v);
        if (!p.have_ratio) continue;
        long long lhs = p.num * report.min_ratio_den;
        long long rhs = report.min_ratio_num * p.den;
        bool better = !have || lhs < rhs ||
                      (lhs == rhs && std::make_pair(p.wi, p.wj) <
                                         std::make_pair(report.worst_i, report.worst_j));
        if (better) {
            have = true;
            report.min_ratio_num = p.num;
            report.min_ratio_den = p.den;
            report.worst_i = p.wi;
            report.worst_j = p.wj;
        }
    }
    report.pass = report.violations.empty();
    return report;
}

// Montesinos: a closed orientable SFS over F with n exceptional fibers is at
// most 3 - chi(F) + n surgeries from S^3 (orientable base), respectively
// 5 - 2*chi(F) + n (non-orientable base).
inline long long montesinos_upper_bound(const SeifertData& s) {
    long long chi = s.base.euler_characteristic();
    long long n = static_cast<long long>(s.exceptional_fiber_count());
    return s.base.orientable ? 3 - chi + n : 5 - 2 * chi + n;
}

enum class SolvKind { torus_bundle, twisted_i_bundles };

inline SolvKind parse_solv_kind(const std::string& kind) {
    if (kind == "torus-bundle") return SolvKind::torus_bundle;
    if (kind == "twisted-I-bundles") return SolvKind::twisted_i_bundles;
    throw domain_error("unknown solv kind '" + kind +
                       "' (expected torus-bundle or twisted-I-bundles)");
}

// Solv manifolds sit close to S^3: torus bundles within 5 surgeries, unions
// of twisted I-bundles over the Klein bottle within 3.
inline long long solv_upper_bound(SolvKind kind) {
    return kind == SolvKind::torus_bundle ? 5 : 3;
}

}  // namespace dsg
