#pragma once

#include "dsg/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dsg {

// Symmetrized Alexander polynomial coefficients a_0, a_1, ..., a_g with
// a_i = a_{-i}. Trailing zeros are trimmed so that a_g != 0 whenever g > 0.
struct AlexanderCoefficients {
    std::vector<long long> a;

    AlexanderCoefficients() : a{0} {}
    explicit AlexanderCoefficients(std::vector<long long> coeffs) : a(std::move(coeffs)) {
        if (a.empty()) a.push_back(0);
        while (a.size() > 1 && a.back() == 0) a.pop_back();
    }

    std::size_t genus() const { return a.size() - 1; }

    long long at(std::size_t i) const { return i < a.size() ? a[i] : 0; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        return s;
    }
};

// L-space coefficient condition: scanning a_g, a_{g-1}, ..., a_0, the nonzero
// entries must all be +-1 with alternating signs.
inline bool lspace_alternating_test(const AlexanderCoefficients& c) {
    int prev = 0;
    for (std::size_t k = c.a.size(); k-- > 0;) {
        long long v = c.a[k];
        if (v == 0) continue;
        if (v != 1 && v != -1) return false;
        int sign = v > 0 ? 1 : -1;
        if (prev != 0 && sign == prev) return false;
        prev = sign;
    }
    return true;
}

// Knot-side correction-term difference for p/q surgery in spin-c slot i:
//   d(S^3_{p/q}(K), i) - d(S^3_{p/q}(U), i) = -2 * sum_{j>=1} j * a_{c+j}
// with c = |floor(i/q)|, valid for p/q >= 0 and |i| <= p/2.
inline long long correction_delta(const AlexanderCoefficients& coeffs, long long p, long long q,
                                  long long i) {
    if (q < 1 || p < 0) throw domain_error("correction_delta requires p/q >= 0 (q >= 1, p >= 0)");
    if (2 * (i < 0 ? -i : i) > p)
        throw domain_error("spin-c index out of range: |" + std::to_string(i) + "| > " +
                           std::to_string(p) + "/2");
    long long fl = i >= 0 ? i / q : -((-i + q - 1) / q);  // floor(i/q)
    std::size_t c = static_cast<std::size_t>(fl < 0 ? -fl : fl);
    long long sum = 0;
    for (std::size_t m = c + 1; m < coeffs.a.size(); ++m)
        sum += static_cast<long long>(m - c) * coeffs.a[m];
    return -2 * sum;
}

// Explicit form of the finite budget in the surgery obstruction for p = 25:
// an L-space p/q-surgery knot has 25/q >= 2g-1 and alternating +-1
// coefficients, so |correction_delta| is bounded by a maximum over finitely
// many coefficient vectors and spin-c slots.
struct ObstructionBudget {
    long long q{1};
    long long genus_cap{0};      // largest genus compatible with 25/q >= 2g-1
    long long budget{0};         // max |correction_delta| over the family
    std::size_t vectors_checked{0};
    AlexanderCoefficients worst;
    long long worst_i{0};
    std::string note;
};

inline ObstructionBudget obstruction_budget(long long q) {
    if (q < 1) throw domain_error("obstruction_budget: q must be >= 1");
    ObstructionBudget rep;
    rep.q = q;
    rep.genus_cap = (25 + q) / (2 * q);  // floor((25/q + 1)/2)
    if (rep.genus_cap == 0)
        rep.note = "25/q < 1: only the trivial Alexander polynomial fits the genus bound";
    else
        rep.note = "knot-side bound only; the lens-space terms d(S^3_{25/q}(U), i) range over "
                   "finitely many values and are external to this computation";

    const std::size_t len = static_cast<std::size_t>(rep.genus_cap) + 1;
    const std::size_t masks = static_cast<std::size_t>(1) << len;
    for (std::size_t mask = 0; mask < masks; ++mask) {
        for (int lead = 0; lead < (mask == 0 ? 1 : 2); ++lead) {
            std::vector<long long> v(len, 0);
            int sign = lead == 0 ? 1 : -1;
            for (std::size_t k = len; k-- > 0;) {
                if (!(mask & (static_cast<std::size_t>(1) << k))) continue;
                v[k] = sign;
                sign = -sign;
            }
            AlexanderCoefficients cand(v);
            ++rep.vectors_checked;
            for (long long i = -12; i <= 12; ++i) {  // |i| <= 25/2
                long long d = correction_delta(cand, 25, q, i);
                long long mag = d < 0 ? -d : d;
                if (mag > rep.budget) {
                    rep.budget = mag;
                    rep.worst = cand;
                    rep.worst_i = i;
                }
            }
        }
    }
    return rep;
}

}  // namespace dsg
