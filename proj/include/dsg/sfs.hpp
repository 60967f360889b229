#pragma once

#include "dsg/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dsg {

// Closed base surface of a Seifert fibration.
struct BaseSurface {
    bool orientable{true};
    long long genus{0};

    BaseSurface() = default;
    BaseSurface(bool orient, long long g) : orientable(orient), genus(g) {
        if (genus < 0) throw domain_error("negative genus");
        if (!orientable && genus < 1) throw domain_error("non-orientable genus must be >= 1");
    }

    long long euler_characteristic() const {
        return orientable ? 2 - 2 * genus : 2 - genus;
    }

    bool operator==(const BaseSurface& o) const {
        return orientable == o.orientable && genus == o.genus;
    }

    std::string str() const {
        if (orientable) return genus == 0 ? "S^2" : "Sigma_" + std::to_string(genus);
        return genus == 1 ? "RP^2" : "N_" + std::to_string(genus);
    }
};

// SFS(F; a_1/b_1, ..., a_n/b_n): fiber invariants are exact rationals stored
// in lowest terms with positive denominator. A fiber with b = 1 is
// non-exceptional: it contributes to the invariant sum but not to the mod-1
// class multiset.
struct SeifertData {
    BaseSurface base;
    std::vector<Rational> fibers;

    SeifertData() = default;
    SeifertData(BaseSurface b, std::vector<Rational> f)
        : base(b), fibers(std::move(f)) {}

    std::size_t exceptional_fiber_count() const {
        std::size_t n = 0;
        for (const Rational& f : fibers)
            if (f.den >= 2) ++n;
        return n;
    }

    std::string str() const {
        std::string s = "SFS(" + base.str() + ";";
        for (std::size_t i = 0; i < fibers.size(); ++i)
            s += (i ? "," : " ") + fibers[i].str();
        return s + ")";
    }
};

// Fiber-isomorphism invariants of a closed Seifert fibration: the multiset of
// mod-1 classes of the exceptional fibers together with the exact sum of all
// Seifert invariants.
struct SeifertClass {
    std::vector<Rational> classes;  // fractional parts in (0,1), sorted
    Rational total;

    bool operator==(const SeifertClass& o) const {
        return classes == o.classes && total == o.total;
    }
};

inline SeifertClass normalize(const SeifertData& s) {
    SeifertClass c;
    c.total = Rational(0);
    for (const Rational& f : s.fibers) {
        c.total += f;
        Rational fr = f.frac();
        if (fr.num != 0) c.classes.push_back(fr);  // b = 1 fibers drop out
    }
    std::sort(c.classes.begin(), c.classes.end());
    return c;
}

// Hatcher's criterion for closed bases: same mod-1 class multiset and equal
// invariant sums, after matching base surfaces.
inline bool homeomorphic_fibrations(const SeifertData& s1, const SeifertData& s2) {
    if (!(s1.base == s2.base)) return false;
    return normalize(s1) == normalize(s2);
}

// Orbifold Euler characteristic of the closed base orbifold.
inline Rational base_orbifold_chi(const SeifertData& s) {
    Rational chi(s.base.euler_characteristic());
    for (const Rational& f : s.fibers)
        if (f.den >= 2) chi -= Rational(f.den - 1, f.den);
    return chi;
}

inline bool base_orbifold_hyperbolic(const SeifertData& s) {
    return base_orbifold_chi(s) < Rational(0);
}

// Outcome of the common-exterior test between two Seifert fibrations.
struct FiberRelation {
    bool related{false};
    // The surgery edge is only certified when both drilled exteriors fiber
    // over hyperbolic base orbifolds (unique fibrations); otherwise the pair
    // is reported as related with an unverified edge.
    bool edge_verified{false};
    std::optional<std::size_t> deleted_fiber_1, deleted_fiber_2;

    std::string str() const {
        if (!related) return "not related";
        return edge_verified ? "related" : "related (unverified edge)";
    }
};

namespace detail {

inline std::vector<Rational> classes_without(const SeifertData& s, std::size_t skip) {
    std::vector<Rational> classes;
    for (std::size_t i = 0; i < s.fibers.size(); ++i) {
        if (i == skip) continue;
        Rational fr = s.fibers[i].frac();
        if (fr.num != 0) classes.push_back(fr);
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

// Base orbifold of the exterior of one fiber: the base surface minus a disk,
// keeping the remaining cone points.
inline Rational exterior_orbifold_chi(const SeifertData& s, std::size_t skip) {
    Rational chi(s.base.euler_characteristic() - 1);
    for (std::size_t i = 0; i < s.fibers.size(); ++i) {
        if (i == skip) continue;
        if (s.fibers[i].den >= 2) chi -= Rational(s.fibers[i].den - 1, s.fibers[i].den);
    }
    return chi;
}

}  // namespace detail

// Two fibrations over the same base are fiber-surgery related when deleting
// one fiber from each leaves equal mod-1 class multisets (a common exterior);
// the invariant sums are unconstrained. Requires equal bases.
inline FiberRelation fiber_surgery_relation(const SeifertData& s1, const SeifertData& s2) {
    if (!(s1.base == s2.base))
        throw domain_error("fiber_surgery_related: base surfaces differ");
    FiberRelation best;
    for (std::size_t i = 0; i < s1.fibers.size(); ++i) {
        std::vector<Rational> c1 = detail::classes_without(s1, i);
        for (std::size_t j = 0; j < s2.fibers.size(); ++j) {
            if (c1 != detail::classes_without(s2, j)) continue;
            FiberRelation rel;
            rel.related = true;
            rel.deleted_fiber_1 = i;
            rel.deleted_fiber_2 = j;
            rel.edge_verified = detail::exterior_orbifold_chi(s1, i) < Rational(0) &&
                                detail::exterior_orbifold_chi(s2, j) < Rational(0);
            if (rel.edge_verified) return rel;
            if (!best.related) best = rel;
        }
    }
    return best;
}

inline bool fiber_surgery_related(const SeifertData& s1, const SeifertData& s2) {
    return fiber_surgery_relation(s1, s2).related;
}

// The K_infinity family M_{i,j}, i in 1..4, j in 0..J: M_{i,j} is the
// fibration over S^2 whose three exceptional fibers are a_t/b_t + j for
// t != i. Every pair is fiber-surgery related and no two are isomorphic
// fibrations.
inline std::vector<SeifertData> kinfty_family(const std::vector<Rational>& a, long long J) {
    if (a.size() != 4) throw domain_error("kinfty_family: need exactly four fractions");
    if (J < 0) throw domain_error("kinfty_family: J must be >= 0");
    std::vector<std::string> problems;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(Rational(0) < a[i] && a[i] < Rational(1)))
            problems.push_back("fraction " + a[i].str() + " not in (0,1)");
        for (std::size_t j = i + 1; j < 4; ++j)
            if (a[i] == a[j]) problems.push_back("fractions must be distinct: " + a[i].str());
    }
    Rational recip_sum(0);
    for (const Rational& f : a) recip_sum += Rational(1, f.den);
    if (!(recip_sum < Rational(1)))
        problems.push_back("sum 1/b_i >= 1: base orbifold not hyperbolic");
    if (!problems.empty()) {
        std::string msg = "kinfty_family:";
        for (const std::string& p : problems) msg += " " + p + ";";
        throw domain_error(msg);
    }

    std::vector<SeifertData> family;
    family.reserve(4 * (J + 1));
    for (long long j = 0; j <= J; ++j)
        for (std::size_t i = 0; i < 4; ++i) {
            std::vector<Rational> fibers;
            for (std::size_t t = 0; t < 4; ++t)
                if (t != i) fibers.push_back(a[t] + Rational(j));
            family.emplace_back(BaseSurface(true, 0), std::move(fibers));
        }
    return family;
}

}  // namespace dsg
