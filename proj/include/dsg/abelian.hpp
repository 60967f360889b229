#pragma once

#include "dsg/matrix.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace dsg {

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank (+) Z/d1 (+) ... (+) Z/dm with d1 | d2 | ... | dm, di >= 2.
struct AbelianGroup {
    long long free_rank{0};
    std::vector<Int> torsion;

    AbelianGroup() = default;
    AbelianGroup(long long rank, std::vector<Int> factors)
        : free_rank(rank), torsion(std::move(factors)) {
        if (free_rank < 0) throw domain_error("negative free rank");
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            if (torsion[i] < 2) throw domain_error("invariant factor must be >= 2");
            if (i > 0 && torsion[i] % torsion[i - 1] != 0)
                throw domain_error("invariant factors must form a divisibility chain");
        }
    }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_cyclic() const { return free_rank + static_cast<long long>(torsion.size()) <= 1; }

    // Group order; empty when infinite.
    std::optional<Int> order() const {
        if (free_rank > 0) return std::nullopt;
        Int n = 1;
        for (const Int& d : torsion) n *= d;
        return n;
    }

    bool operator==(const AbelianGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

    std::string str() const {
        if (is_trivial()) return "0";
        std::string s;
        auto append = [&s](const std::string& part) {
            if (!s.empty()) s += " + ";
            s += part;
        };
        if (free_rank == 1) append("Z");
        else if (free_rank > 1) append("Z^" + std::to_string(free_rank));
        for (const Int& d : torsion) append("Z/" + d.str());
        return s;
    }
};

// U*A*V = D with U, V unimodular and D diagonal satisfying the divisibility
// chain (trailing zeros allowed).
struct SnfResult {
    IntMatrix D, U, V;

    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
        return d;
    }
};

namespace detail {

constexpr std::size_t kSnfSizeCap = 512;

class SnfWorker {
public:
    SnfWorker(IntMatrix a, bool transforms) : d_(std::move(a)), with_transforms_(transforms) {
        if (d_.rows() > kSnfSizeCap || d_.cols() > kSnfSizeCap)
            throw domain_error("smith_normal_form: matrix exceeds 512x512 cap");
        if (with_transforms_) {
            u_ = IntMatrix::identity(d_.rows());
            v_ = IntMatrix::identity(d_.cols());
        }
    }

    void run() {
        const std::size_t steps = std::min(d_.rows(), d_.cols());
        for (std::size_t t = 0; t < steps; ++t)
            if (!reduce_pivot(t)) break;
        for (std::size_t t = 0; t < steps; ++t)
            if (d_(t, t) < 0) negate_row(t);
        fix_divisibility_chain(steps);
    }

    IntMatrix& d() { return d_; }
    IntMatrix& u() { return u_; }
    IntMatrix& v() { return v_; }

private:
    // Elementary operations, mirrored into U (rows) and V (cols).
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < d_.cols(); ++j) d_(i, j) = -d_(i, j);
        if (with_transforms_)
            for (std::size_t j = 0; j < u_.cols(); ++j) u_(i, j) = -u_(i, j);
    }
    void row_axpy(std::size_t dst, std::size_t src, const Int& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < d_.cols(); ++j) d_(dst, j) += c * d_(src, j);
        if (with_transforms_)
            for (std::size_t j = 0; j < u_.cols(); ++j) u_(dst, j) += c * u_(src, j);
    }
    void col_axpy(std::size_t dst, std::size_t src, const Int& c) {
        if (c == 0) return;
        for (std::size_t i = 0; i < d_.rows(); ++i) d_(i, dst) += c * d_(i, src);
        if (with_transforms_)
            for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, dst) += c * v_(i, src);
    }
    void swap_rows(std::size_t i, std::size_t j) {
        d_.swap_rows(i, j);
        if (with_transforms_) u_.swap_rows(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        d_.swap_cols(i, j);
        if (with_transforms_) v_.swap_cols(i, j);
    }
    // Columns (i,j) <- (x*Ci + y*Cj, p*Ci + q*Cj); caller guarantees xq - yp = +-1.
    void col_mix(std::size_t i, std::size_t j, const Int& x, const Int& y, const Int& p, const Int& q) {
        for (std::size_t r = 0; r < d_.rows(); ++r) {
            Int ci = d_(r, i), cj = d_(r, j);
            d_(r, i) = x * ci + y * cj;
            d_(r, j) = p * ci + q * cj;
        }
        if (with_transforms_)
            for (std::size_t r = 0; r < v_.rows(); ++r) {
                Int ci = v_(r, i), cj = v_(r, j);
                v_(r, i) = x * ci + y * cj;
                v_(r, j) = p * ci + q * cj;
            }
    }

    // Smallest-magnitude nonzero entry of the trailing submatrix; pivoting on
    // it keeps intermediate entries from blowing up.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < d_.rows(); ++i)
            for (std::size_t j = t; j < d_.cols(); ++j) {
                const Int& e = d_(i, j);
                if (e == 0) continue;
                Int mag = abs_int(e);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    // Clear row t and column t using the pivot at (t,t); returns false when the
    // trailing submatrix is all zero.
    bool reduce_pivot(std::size_t t) {
        while (true) {
            std::size_t pi = 0, pj = 0;
            if (!find_pivot(t, pi, pj)) return false;
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool exact = true;
            for (std::size_t i = t + 1; i < d_.rows(); ++i) {
                if (d_(i, t) == 0) continue;
                Int q = d_(i, t) / d_(t, t);
                row_axpy(i, t, -q);
                if (d_(i, t) != 0) exact = false;  // remainder is a smaller pivot
            }
            for (std::size_t j = t + 1; j < d_.cols(); ++j) {
                if (d_(t, j) == 0) continue;
                Int q = d_(t, j) / d_(t, t);
                col_axpy(j, t, -q);
                if (d_(t, j) != 0) exact = false;
            }
            if (!exact) continue;

            bool clear = true;
            for (std::size_t i = t + 1; i < d_.rows() && clear; ++i)
                if (d_(i, t) != 0) clear = false;
            for (std::size_t j = t + 1; j < d_.cols() && clear; ++j)
                if (d_(t, j) != 0) clear = false;
            if (clear) return true;
        }
    }

    // Enforce d_i | d_{i+1} along the nonzero diagonal prefix.
    void fix_divisibility_chain(std::size_t steps) {
        std::size_t rank = 0;
        while (rank < steps && d_(rank, rank) != 0) ++rank;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 1 < rank; ++i) {
                const Int a = d_(i, i);
                const Int b = d_(i + 1, i + 1);
                if (b % a == 0) continue;
                changed = true;
                Int x, y;
                Int g = ext_gcd(a, b, x, y);
                // diag(a,b) -> [[a,b],[0,b]] -> [[g,0],[y*b, a*b/g]] -> diag(g, a*b/g)
                row_axpy(i, i + 1, 1);
                col_mix(i, i + 1, x, y, -b / g, a / g);
                row_axpy(i + 1, i, -(y * b) / g);
            }
        }
    }

    IntMatrix d_, u_, v_;
    bool with_transforms_;
};

}  // namespace detail

inline SnfResult smith_normal_form(const IntMatrix& a) {
    detail::SnfWorker w(a, true);
    w.run();
    return SnfResult{std::move(w.d()), std::move(w.u()), std::move(w.v())};
}

// Diagonal-only Smith form, for callers that just need invariant factors.
inline std::vector<Int> smith_diagonal(const IntMatrix& a) {
    detail::SnfWorker w(a, false);
    w.run();
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(w.d().rows(), w.d().cols()); ++i)
        d.push_back(w.d()(i, i));
    return d;
}

// Cokernel Z^rows / A(Z^cols) as an abelian group (columns are relations).
// For square presentation matrices the transpose convention is equivalent.
inline AbelianGroup cokernel(const IntMatrix& a) {
    std::vector<Int> diag = smith_diagonal(a);
    long long rank = 0;
    std::vector<Int> torsion;
    for (const Int& d : diag) {
        if (d == 0) continue;
        ++rank;
        if (d > 1) torsion.push_back(d);
    }
    return AbelianGroup(static_cast<long long>(a.rows()) - rank, torsion);
}

inline long long betti(const AbelianGroup& g) { return g.free_rank; }

// Maximal n with a surjection G ->> (Z/p)^n: the free rank plus the number of
// invariant factors divisible by p.
inline long long p_rank(const AbelianGroup& g, const Int& p) {
    if (!is_prime(p)) throw domain_error("p_rank: " + p.str() + " is not prime");
    long long count = g.free_rank;
    for (const Int& d : g.torsion)
        if (d % p == 0) ++count;
    return count;
}

// Primes dividing some invariant factor. Since d1 | ... | dm it suffices to
// factor the last one.
inline std::vector<Int> support_primes(const AbelianGroup& g) {
    if (g.torsion.empty()) return {};
    std::vector<Int> primes;
    for (auto& [p, e] : factorize(g.torsion.back())) primes.push_back(p);
    return primes;
}

// Primary decomposition (prime-power cyclic summands), derived view.
inline std::vector<std::pair<Int, int>> primary_decomposition(const AbelianGroup& g) {
    std::vector<std::pair<Int, int>> parts;
    for (const Int& d : g.torsion)
        for (auto& [p, e] : factorize(d)) parts.emplace_back(p, e);
    std::sort(parts.begin(), parts.end());
    return parts;
}

}  // namespace dsg
