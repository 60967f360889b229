#include "dsg/distance.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using dsg::AbelianGroup;
using dsg::GridPoint;
using dsg::GridTable;
using dsg::Int;
using dsg::RationalSlope;
using dsg::SurgeryDescription;

namespace {

AbelianGroup random_group(std::mt19937& rng) {
    std::uniform_int_distribution<int> rank(0, 2);
    std::uniform_int_distribution<int> tcount(0, 3);
    std::uniform_int_distribution<int> base(2, 6);
    std::uniform_int_distribution<int> mult(1, 4);
    int t = tcount(rng);
    std::vector<Int> torsion;
    Int d = 1;
    for (int i = 0; i < t; ++i) {
        d *= base(rng) * (i == 0 ? 1 : mult(rng));
        torsion.push_back(d);
    }
    return AbelianGroup(rank(rng), torsion);
}

}  // namespace

TEST_CASE("homology lower bound on the quoted examples") {
    AbelianGroup z2cubed(0, {Int(2), Int(2), Int(2)});
    CHECK(dsg::lower_bound(z2cubed, AbelianGroup()) == 3);

    AbelianGroup g(1, {Int(4), Int(12)});
    CHECK(dsg::lower_bound(g, g) == 0);

    // (Z/2)^4 + (Z/6)^2 vs Z/6: gap 5 at p = 2, gap 1 at p = 3
    AbelianGroup big(0, {Int(2), Int(2), Int(2), Int(2), Int(6), Int(6)});
    AbelianGroup small(0, {Int(6)});
    std::vector<dsg::BoundWitness> witnesses;
    CHECK(dsg::lower_bound(big, small, &witnesses) == 5);
    REQUIRE(witnesses.size() == 1);
    CHECK(witnesses[0].kind == dsg::BoundWitness::Kind::p_rank_gap);
    CHECK(witnesses[0].prime == 2);

    // betti gaps count too
    CHECK(dsg::lower_bound(AbelianGroup(3, {}), AbelianGroup()) == 3);
}

TEST_CASE("lower bound is a pseudo-metric minorant") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 80; ++trial) {
        AbelianGroup a = random_group(rng), b = random_group(rng), c = random_group(rng);
        long long ab = dsg::lower_bound(a, b);
        long long ba = dsg::lower_bound(b, a);
        long long bc = dsg::lower_bound(b, c);
        long long ac = dsg::lower_bound(a, c);
        CHECK(ab == ba);
        CHECK(dsg::lower_bound(a, a) == 0);
        CHECK(ac <= ab + bc);
    }
}

TEST_CASE("slope-difference upper bound") {
    std::vector<Int> primes = {2, 3};
    SurgeryDescription a2 = dsg::family_flat(2, 4, primes, GridPoint({2, 0}));
    SurgeryDescription a3 = dsg::family_flat(2, 4, primes, GridPoint({3, 0}));
    CHECK(dsg::upper_bound_slope_diff(a2, a3) == 1);
    CHECK(dsg::upper_bound_slope_diff(a2, a2) == 0);

    SurgeryDescription c21 = dsg::family_flat(2, 4, primes, GridPoint({2, 1}));
    SurgeryDescription c03 = dsg::family_flat(2, 4, primes, GridPoint({0, 3}));
    CHECK(dsg::upper_bound_slope_diff(c21, c03) == 4);

    SurgeryDescription other = SurgeryDescription::split({RationalSlope(Int(2), Int(1))});
    CHECK_THROWS_WITH(dsg::upper_bound_slope_diff(a2, other),
                      Catch::Matchers::ContainsSubstring("incomparable"));
}

TEST_CASE("grid table bounds") {
    std::vector<Int> primes = {2, 3};
    GridTable table(2, 3, primes, 1);
    REQUIRE(table.size() == 4);  // (0,0),(0,1),(1,0),(1,1)

    auto index_of = [&](std::vector<long long> c) {
        for (std::size_t i = 0; i < table.size(); ++i)
            if (table.point(i).counts == c) return i;
        FAIL("point not found");
        return std::size_t(0);
    };

    std::size_t a1 = index_of({1, 0}), b1 = index_of({0, 1}), origin = index_of({0, 0});

    // A_1 vs B_1: p-rank at 2 agrees, at 3 differs by one; L1 distance 2
    dsg::DistanceBound b = table.bound(a1, b1);
    CHECK(b.lower == 1);
    CHECK(*b.upper == 2);

    // a point against itself
    b = table.bound(a1, a1);
    CHECK(b.lower == 0);
    CHECK(*b.upper == 0);

    // S^3 against C_{1,1}: exact distance j+k
    b = table.bound(origin, index_of({1, 1}));
    CHECK(b.lower == 2);
    CHECK(*b.upper == 2);
}

TEST_CASE("axis exactness: distance from S^3 to C_{j,k} is j+k") {
    std::vector<Int> primes = {2, 3};
    GridTable table(2, 6, primes, 6);
    std::size_t origin = 0;
    REQUIRE(table.point(origin).counts == std::vector<long long>{0, 0});
    for (std::size_t i = 0; i < table.size(); ++i) {
        long long jk = table.point(i).counts[0] + table.point(i).counts[1];
        dsg::DistanceBound b = table.bound(origin, i);
        CHECK(b.lower == jk);
        CHECK(*b.upper == jk);
    }
}

TEST_CASE("quasi-flat certification for k = 2") {
    std::vector<Int> primes = {2, 3};
    GridTable table(2, 10, primes, 10);
    dsg::QuasiflatReport rep = dsg::certify_quasiflat(table);
    CHECK(rep.pass);
    CHECK(rep.pairs_checked == 121 * 122 / 2);
    // the exhaustive minimum of lower/L1 on this grid is exactly 1/3
    CHECK(rep.min_ratio_num * 3 == rep.min_ratio_den);
    CHECK(rep.violations.empty());

    // threading must not change the result
    dsg::QuasiflatReport rep4 = dsg::certify_quasiflat(table, 4);
    CHECK(rep4.pass == rep.pass);
    CHECK(rep4.min_ratio_num == rep.min_ratio_num);
    CHECK(rep4.min_ratio_den == rep.min_ratio_den);
    CHECK(rep4.pairs_checked == rep.pairs_checked);
}

TEST_CASE("grid caches agree with the generic bound computation") {
    std::vector<Int> primes = {2, 3, 5};
    GridTable table(3, 3, primes, 2);
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = i; j < table.size(); ++j) {
            dsg::DistanceBound fast = table.bound(i, j);
            long long lower = dsg::lower_bound(table.group(i), table.group(j));
            long long upper =
                dsg::upper_bound_slope_diff(table.description(i), table.description(j));
            CHECK(fast.lower == lower);
            CHECK(*fast.upper == upper);
            CHECK(fast.lower <= *fast.upper);  // bounds stay ordered
            auto [cl, cu] = table.bounds_compact(i, j);
            CHECK(cl == lower);
            CHECK(cu == upper);
        }
}

TEST_CASE("quasi-flat certification passes for k = 1..4 at radius 10") {
    std::vector<Int> all_primes = {2, 3, 5, 7};
    for (std::size_t k = 1; k <= 4; ++k) {
        std::vector<Int> primes(all_primes.begin(), all_primes.begin() + k);
        GridTable table(k, 10, primes, 10);
        dsg::QuasiflatReport rep = dsg::certify_quasiflat(table, 4);
        INFO("k = " << k);
        CHECK(rep.pass);
        CHECK(rep.min_ratio_num * (2 * static_cast<long long>(k) - 1) >= rep.min_ratio_den);
    }
}

TEST_CASE("one-dimensional grids are isometric rays") {
    GridTable table(1, 8, {Int(2)}, 8);
    dsg::QuasiflatReport rep = dsg::certify_quasiflat(table);
    CHECK(rep.pass);
    CHECK(rep.min_ratio_num == rep.min_ratio_den);  // lower = L1 everywhere
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = i; j < table.size(); ++j) {
            dsg::DistanceBound b = table.bound(i, j);
            CHECK(b.lower == table.l1(i, j));
            CHECK(*b.upper == table.l1(i, j));
        }
}

TEST_CASE("degenerate N = 0 grid certifies trivially") {
    GridTable table(2, 1, {Int(2), Int(3)}, 0);
    dsg::QuasiflatReport rep = dsg::certify_quasiflat(table);
    CHECK(rep.pass);
    CHECK(rep.pairs_checked == 1);
}

TEST_CASE("Myers-augmented grids give identical tables") {
    std::vector<Int> primes = {2, 3};
    GridTable plain(2, 3, primes, 3);
    GridTable myers(2, 3, primes, 3, 7);  // extra component with slope 1/7
    REQUIRE(plain.size() == myers.size());
    for (std::size_t i = 0; i < plain.size(); ++i) {
        CHECK(plain.group(i) == myers.group(i));
        CHECK(myers.description(i).components() == plain.description(i).components() + 1);
    }
    for (std::size_t i = 0; i < plain.size(); ++i)
        for (std::size_t j = i; j < plain.size(); ++j) {
            dsg::DistanceBound bp = plain.bound(i, j);
            dsg::DistanceBound bm = myers.bound(i, j);
            CHECK(bp.lower == bm.lower);
            CHECK(*bp.upper == *bm.upper);
        }
}

TEST_CASE("grid preconditions") {
    CHECK_THROWS_AS(GridTable(2, 3, {Int(2), Int(3)}, 4), dsg::domain_error);  // N > blocksize
    CHECK_THROWS_AS(GridTable(2, 3, {Int(2), Int(3)}, -1), dsg::domain_error);
}

TEST_CASE("Montesinos upper bounds") {
    using dsg::BaseSurface;
    using dsg::Rational;
    using dsg::SeifertData;

    // S^2 base (chi = 2), three exceptional fibers -> 3 - 2 + 3 = 4
    SeifertData s(BaseSurface(true, 0),
                  {Rational(1, 2), Rational(2, 3), Rational(3, 5)});
    CHECK(dsg::montesinos_upper_bound(s) == 4);

    // integer fibers are not exceptional
    SeifertData with_integer(BaseSurface(true, 0),
                             {Rational(1, 2), Rational(2, 3), Rational(3, 5), Rational(2, 1)});
    CHECK(dsg::montesinos_upper_bound(with_integer) == 4);

    // S^2 base, no exceptional fibers -> 1
    CHECK(dsg::montesinos_upper_bound(SeifertData(BaseSurface(true, 0), {})) == 1);

    // non-orientable genus 1 (chi = 1), two fibers -> 5 - 2 + 2 = 5
    SeifertData nonor(BaseSurface(false, 1), {Rational(1, 2), Rational(1, 3)});
    CHECK(dsg::montesinos_upper_bound(nonor) == 5);
}

TEST_CASE("solv upper bounds") {
    CHECK(dsg::solv_upper_bound(dsg::parse_solv_kind("torus-bundle")) == 5);
    CHECK(dsg::solv_upper_bound(dsg::parse_solv_kind("twisted-I-bundles")) == 3);
    CHECK_THROWS_AS(dsg::parse_solv_kind("nil"), dsg::domain_error);
}
