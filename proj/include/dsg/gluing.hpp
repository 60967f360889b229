#pragma once

#include "dsg/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace dsg {

using Complex = std::complex<double>;

// Log-form gluing equations for an ideal triangulation with t tetrahedra.
// Row (a_1, b_1, ..., a_t, b_t | c) encodes
//   a_1 log(z_1) + b_1 log(1-z_1) + ... + a_t log(z_t) + b_t log(1-z_t) - c*pi*i = 0,
// read with principal logarithms; branch defects show up as multiples of
// 2*pi*i in the raw residual and are reported, never hidden.
struct GluingSystem {
    std::size_t tetrahedra{0};
    std::vector<std::vector<long long>> rows;  // each of width 2*tetrahedra + 1

    GluingSystem() = default;
    GluingSystem(std::size_t t, std::vector<std::vector<long long>> r)
        : tetrahedra(t), rows(std::move(r)) {
        for (const auto& row : rows)
            if (row.size() != 2 * tetrahedra + 1)
                throw domain_error("gluing row width must be 2t+1");
    }

    std::size_t equations() const { return rows.size(); }
    long long a(std::size_t row, std::size_t tet) const { return rows[row][2 * tet]; }
    long long b(std::size_t row, std::size_t tet) const { return rows[row][2 * tet + 1]; }
    long long c(std::size_t row) const { return rows[row].back(); }
};

// Tetrahedron shape parameters. Geometric solutions have Im(z) > 0 for every
// tetrahedron; z in {0, 1} is degenerate.
struct ShapeVector {
    std::vector<Complex> z;

    ShapeVector() = default;
    explicit ShapeVector(std::vector<Complex> shapes) : z(std::move(shapes)) {}

    std::size_t size() const { return z.size(); }

    bool all_upper_half_plane() const {
        for (const Complex& s : z)
            if (!(s.imag() > 0)) return false;
        return true;
    }
};

namespace detail {

inline void check_shapes(const GluingSystem& sys, const ShapeVector& z) {
    if (z.size() != sys.tetrahedra)
        throw domain_error("shape vector length does not match tetrahedron count");
    for (const Complex& s : z.z) {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
            throw domain_error("non-finite shape parameter");
        if (s == Complex(0.0, 0.0) || s == Complex(1.0, 0.0))
            throw domain_error("degenerate shape parameter z in {0,1}");
    }
}

}  // namespace detail

struct ResidualReport {
    std::vector<Complex> raw;        // principal-branch values
    std::vector<Complex> reduced;    // raw minus the nearest multiple of 2*pi*i
    std::vector<long long> branch;   // the multiple removed per row
    double max_raw{0.0};
    double max_reduced{0.0};
};

// Evaluate every gluing equation at z. `branch[k]` rounds Im(raw)/2pi, so the
// reduced residual of a genuine solution vanishes regardless of which branch
// the c-column was recorded in.
inline ResidualReport residual(const GluingSystem& sys, const ShapeVector& z) {
    detail::check_shapes(sys, z);
    ResidualReport rep;
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t k = 0; k < sys.equations(); ++k) {
        Complex r(0.0, 0.0);
        for (std::size_t i = 0; i < sys.tetrahedra; ++i) {
            if (sys.a(k, i) != 0) r += static_cast<double>(sys.a(k, i)) * std::log(z.z[i]);
            if (sys.b(k, i) != 0) r += static_cast<double>(sys.b(k, i)) * std::log(1.0 - z.z[i]);
        }
        r -= Complex(0.0, std::numbers::pi * static_cast<double>(sys.c(k)));
        long long m = std::llround(r.imag() / two_pi);
        Complex red = r - Complex(0.0, two_pi * static_cast<double>(m));
        rep.raw.push_back(r);
        rep.reduced.push_back(red);
        rep.branch.push_back(m);
        rep.max_raw = std::max(rep.max_raw, std::abs(r));
        rep.max_reduced = std::max(rep.max_reduced, std::abs(red));
    }
    return rep;
}

// d/dz_i of row k: a_i/z_i - b_i/(1-z_i).
inline std::vector<std::vector<Complex>> jacobian(const GluingSystem& sys, const ShapeVector& z) {
    detail::check_shapes(sys, z);
    std::vector<std::vector<Complex>> jac(sys.equations(),
                                          std::vector<Complex>(sys.tetrahedra));
    for (std::size_t k = 0; k < sys.equations(); ++k)
        for (std::size_t i = 0; i < sys.tetrahedra; ++i) {
            Complex d(0.0, 0.0);
            if (sys.a(k, i) != 0) d += static_cast<double>(sys.a(k, i)) / z.z[i];
            if (sys.b(k, i) != 0) d -= static_cast<double>(sys.b(k, i)) / (1.0 - z.z[i]);
            jac[k][i] = d;
        }
    return jac;
}

namespace detail {

// In-place LU solve with partial pivoting; returns false on (numerical)
// singularity.
inline bool solve_linear(std::vector<std::vector<Complex>> a, std::vector<Complex> rhs,
                         std::vector<Complex>& out) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(a[col][col]);
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::abs(a[i][col]) > best) {
                best = std::abs(a[i][col]);
                piv = i;
            }
        if (best < 1e-14) return false;
        std::swap(a[col], a[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (std::size_t i = col + 1; i < n; ++i) {
            Complex f = a[i][col] / a[col][col];
            if (f == Complex(0.0, 0.0)) continue;
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    out.assign(n, Complex(0.0, 0.0));
    for (std::size_t i = n; i-- > 0;) {
        Complex s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * out[j];
        out[i] = s / a[i][i];
    }
    return true;
}

}  // namespace detail

struct NewtonResult {
    enum class Status { converged, singular_jacobian, diverged, degenerate };
    Status status{Status::diverged};
    ShapeVector shapes;
    std::vector<double> residual_trace;  // max |residual| per iterate, branch-adjusted
    std::vector<long long> branch;       // branch sheet fixed from the start point
    bool geometric{false};               // all Im(z) > 0 at the final iterate
    int iterations{0};
    std::string message;

    bool converged() const { return status == Status::converged; }
};

// Newton iteration on the branch-adjusted residual. The 2*pi*i sheet is
// locked in from the starting point, so starts near a solution converge to it
// instead of fighting a constant branch offset.
inline NewtonResult newton_solve(const GluingSystem& sys, const ShapeVector& z0,
                                 double tol = 1e-10, int max_iter = 100) {
    if (sys.equations() != sys.tetrahedra)
        throw domain_error("newton_solve requires a square system");
    NewtonResult res;
    res.shapes = z0;
    const double two_pi = 2.0 * std::numbers::pi;

    ResidualReport rep = residual(sys, res.shapes);
    res.branch = rep.branch;

    auto adjusted = [&](const ResidualReport& r) {
        std::vector<Complex> v(r.raw.size());
        double worst = 0.0;
        for (std::size_t k = 0; k < r.raw.size(); ++k) {
            v[k] = r.raw[k] - Complex(0.0, two_pi * static_cast<double>(res.branch[k]));
            worst = std::max(worst, std::abs(v[k]));
        }
        return std::make_pair(v, worst);
    };

    auto [rvec, rnorm] = adjusted(rep);
    res.residual_trace.push_back(rnorm);

    for (int iter = 0; iter < max_iter; ++iter) {
        if (rnorm < tol) {
            res.status = NewtonResult::Status::converged;
            res.geometric = res.shapes.all_upper_half_plane();
            res.iterations = iter;
            res.message = res.geometric ? "converged to a geometric solution (all Im z > 0)"
                                        : "converged; solution is not geometric";
            return res;
        }
        std::vector<Complex> step;
        for (Complex& v : rvec) v = -v;
        if (!detail::solve_linear(jacobian(sys, res.shapes), rvec, step)) {
            res.status = NewtonResult::Status::singular_jacobian;
            res.iterations = iter;
            res.message = "Jacobian numerically singular (pivot < 1e-14)";
            return res;
        }
        for (std::size_t i = 0; i < res.shapes.size(); ++i) res.shapes.z[i] += step[i];
        for (const Complex& s : res.shapes.z) {
            if (!std::isfinite(s.real()) || !std::isfinite(s.imag()) ||
                std::abs(s) < 1e-12 || std::abs(s - Complex(1.0, 0.0)) < 1e-12) {
                res.status = NewtonResult::Status::degenerate;
                res.iterations = iter + 1;
                res.message = "iterate degenerated toward z in {0,1}";
                return res;
            }
        }
        rep = residual(sys, res.shapes);
        std::tie(rvec, rnorm) = adjusted(rep);
        res.residual_trace.push_back(rnorm);
    }
    if (rnorm < tol) {
        res.status = NewtonResult::Status::converged;
        res.geometric = res.shapes.all_upper_half_plane();
        res.iterations = max_iter;
        res.message = "converged on the last permitted iteration";
    } else {
        res.status = NewtonResult::Status::diverged;
        res.iterations = max_iter;
        res.message = "no convergence within " + std::to_string(max_iter) + " iterations";
    }
    return res;
}

// Complex dilogarithm Li_2, principal branch. Reflection/inversion shrink the
// argument, then the Bernoulli series in u = -log(1-z) finishes the job.
inline Complex dilog(Complex z) {
    const double pi = std::numbers::pi;
    if (z == Complex(0.0, 0.0)) return {0.0, 0.0};
    if (z == Complex(1.0, 0.0)) return {pi * pi / 6.0, 0.0};
    if (std::abs(z) > 1.0) {
        Complex lz = std::log(-z);
        return -dilog(1.0 / z) - pi * pi / 6.0 - 0.5 * lz * lz;
    }
    if (z.real() > 0.5)
        return pi * pi / 6.0 - std::log(z) * std::log(1.0 - z) - dilog(1.0 - z);

    // Li_2(z) = sum_{n>=0} B_n u^{n+1} / (n+1)!  with u = -log(1-z)
    static const double kBernoulliOverFactorial[] = {
        // B_{2k} / (2k+1)! for k = 1..15
        1.0 / 36.0, -1.0 / 3600.0, 1.0 / 211680.0, -1.0 / 10886400.0,
        1.0 / 526901760.0, -4.0647616451442255e-11, 8.9216910204564526e-13,
        -1.9939295860721076e-14, 4.5189800296199182e-16, -1.0356517612181247e-17,
        2.3952186210261867e-19, -5.5817858743250093e-21, 1.3091507554183213e-22,
        -3.0874198024267403e-24, 7.3159756527022034e-26};
    Complex u = -std::log(1.0 - z);
    Complex u2 = u * u;
    Complex sum = u - u2 / 4.0;
    Complex upow = u * u2;  // u^{2k+1}, k = 1
    for (double coeff : kBernoulliOverFactorial) {
        Complex term = coeff * upow;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        upow *= u2;
    }
    return sum;
}

// Bloch-Wigner function D(z) = Im(Li_2(z)) + arg(1-z) * log|z|; vanishes on
// the real line and gives the signed volume of the ideal tetrahedron with
// cross-ratio z.
inline double bloch_wigner(const Complex& z) {
    if (z.imag() == 0.0) return 0.0;
    return dilog(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

// Hyperbolic volume of the triangulated manifold with the given shapes.
inline double volume(const ShapeVector& z) {
    double v = 0.0;
    for (const Complex& s : z.z) v += bloch_wigner(s);
    return v;
}

}  // namespace dsg
