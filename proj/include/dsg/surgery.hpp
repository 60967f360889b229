#pragma once

#include "dsg/abelian.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dsg {

// Filling slope p/q in canonical form: gcd(|p|,q) = 1, q >= 0, and the
// meridional (trivial) slope is exactly 1/0. A component left unfilled is
// modelled as the trivial slope.
struct RationalSlope {
    Int p{1};
    Int q{0};

    RationalSlope() = default;  // trivial filling 1/0
    RationalSlope(Int num, Int den) : p(std::move(num)), q(std::move(den)) {
        if (p == 0 && q == 0) throw domain_error("slope 0/0 is not a slope");
        if (q < 0) { p = -p; q = -q; }
        Int g = gcd_int(p, q);
        if (g > 1) { p /= g; q /= g; }
        if (q == 0) p = 1;  // 1/0 == -1/0
    }

    static RationalSlope trivial() { return RationalSlope(); }
    static RationalSlope integral(Int n) { return RationalSlope(std::move(n), 1); }

    bool is_trivial() const { return q == 0; }

    bool operator==(const RationalSlope& o) const { return p == o.p && q == o.q; }
    bool operator!=(const RationalSlope& o) const { return !(*this == o); }

    std::string str() const { return p.str() + "/" + q.str(); }
};

// A closed oriented 3-manifold presented by surgery on a link in S^3:
// pairwise linking numbers plus a filling slope per component. Boundary tori
// are framed homologically. Two descriptions are only ever compared through
// invariants; no homeomorphism decisions are made here.
struct SurgeryDescription {
    IntMatrix linking;                 // symmetric, zero diagonal
    std::vector<RationalSlope> slopes;

    SurgeryDescription() = default;
    SurgeryDescription(IntMatrix lk, std::vector<RationalSlope> s)
        : linking(std::move(lk)), slopes(std::move(s)) {
        validate();
    }

    // All-zero linking matrix (split link) with the given slopes.
    static SurgeryDescription split(std::vector<RationalSlope> s) {
        std::size_t n = s.size();
        return SurgeryDescription(IntMatrix(n, n), std::move(s));
    }

    std::size_t components() const { return slopes.size(); }

    void validate() const {
        const std::size_t n = slopes.size();
        if (linking.rows() != n || linking.cols() != n)
            throw domain_error("linking matrix size does not match component count");
        if (!linking.is_symmetric())
            throw domain_error("linking matrix must be symmetric");
        for (std::size_t i = 0; i < n; ++i)
            if (linking(i, i) != 0)
                throw domain_error("linking matrix must have zero diagonal");
    }

    bool same_link(const SurgeryDescription& o) const {
        return components() == o.components() && linking == o.linking;
    }
};

// Point of a k-dimensional surgery grid: counts[i] components of block i carry
// the nontrivial filling.
struct GridPoint {
    std::vector<long long> counts;

    GridPoint() = default;
    explicit GridPoint(std::vector<long long> c) : counts(std::move(c)) {
        for (long long v : counts)
            if (v < 0) throw domain_error("grid point with negative count");
    }

    std::size_t dim() const { return counts.size(); }

    long long l1_distance(const GridPoint& o) const {
        if (dim() != o.dim()) throw domain_error("grid points of different dimension");
        long long d = 0;
        for (std::size_t i = 0; i < counts.size(); ++i)
            d += counts[i] >= o.counts[i] ? counts[i] - o.counts[i] : o.counts[i] - counts[i];
        return d;
    }

    bool operator==(const GridPoint& o) const { return counts == o.counts; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < counts.size(); ++i) {
            s += std::to_string(counts[i]);
            if (i + 1 < counts.size()) s += ",";
        }
        return s + ")";
    }
};

// Homology presentation matrix of a surgery description: row i is the
// meridian relation p_i mu_i + q_i sum_j lk(i,j) mu_j = 0. Its cokernel is
// H_1 of the surgered manifold; trivial slopes contribute unit pivots.
inline IntMatrix presentation_matrix(const SurgeryDescription& d) {
    d.validate();
    const std::size_t n = d.components();
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = d.slopes[i].p;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) a(i, j) = d.slopes[i].q * d.linking(i, j);
    }
    return a;
}

// H_1 of the surgered manifold.
inline AbelianGroup homology(const SurgeryDescription& d) {
    return cokernel(presentation_matrix(d));
}

// Split unlink on k blocks of `blocksize` components. Block i fills its first
// point.counts[i] components with slope (primes[0]*...*primes[i])/1 and leaves
// the rest unfilled, producing H_1 = (+)_i (Z/(p_1...p_{i+1}))^counts[i].
inline SurgeryDescription family_flat(std::size_t k, std::size_t blocksize,
                                      const std::vector<Int>& primes, const GridPoint& point) {
    if (primes.size() != k) throw domain_error("family_flat: need one prime per block");
    if (point.dim() != k) throw domain_error("family_flat: grid point dimension mismatch");
    for (std::size_t i = 0; i < k; ++i) {
        if (!is_prime(primes[i])) throw domain_error("family_flat: " + primes[i].str() + " is not prime");
        for (std::size_t j = i + 1; j < k; ++j)
            if (primes[i] == primes[j]) throw domain_error("family_flat: primes must be distinct");
        if (point.counts[i] > static_cast<long long>(blocksize))
            throw domain_error("family_flat: count " + std::to_string(point.counts[i]) +
                               " exceeds block size " + std::to_string(blocksize));
    }
    std::vector<RationalSlope> slopes;
    slopes.reserve(k * blocksize);
    Int product = 1;
    for (std::size_t i = 0; i < k; ++i) {
        product *= primes[i];
        for (std::size_t c = 0; c < blocksize; ++c) {
            if (static_cast<long long>(c) < point.counts[i])
                slopes.push_back(RationalSlope::integral(product));
            else
                slopes.push_back(RationalSlope::trivial());
        }
    }
    return SurgeryDescription::split(std::move(slopes));
}

// Split (n+1)-component description: slopes r on the first n components and
// 1/qprime on the last (Myers) component. With all pairwise linking numbers
// zero the Myers component is invisible to homology, so
// H_1 = Z/r_1 (+) ... (+) Z/r_n regardless of qprime.
inline SurgeryDescription family_myers(const std::vector<RationalSlope>& r, const Int& qprime) {
    if (qprime < 1) throw domain_error("family_myers: qprime must be >= 1");
    std::vector<RationalSlope> slopes = r;
    slopes.emplace_back(Int(1), qprime);
    return SurgeryDescription::split(std::move(slopes));
}

}  // namespace dsg
