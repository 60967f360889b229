#include "dsg/obstruction.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using dsg::AlexanderCoefficients;

namespace {

// Definition-level oracle: read the nonzero coefficients in ascending index
// order; alternation does not depend on the scan direction.
bool alternating_oracle(const std::vector<long long>& raw) {
    std::vector<long long> nz;
    for (long long v : raw)
        if (v != 0) nz.push_back(v);
    for (std::size_t i = 0; i < nz.size(); ++i) {
        if (nz[i] != 1 && nz[i] != -1) return false;
        if (i > 0 && nz[i] == nz[i - 1]) return false;  // +-1 entries alternate iff they differ
    }
    return true;
}

// Literal evaluation of -2 sum_{j>=1} j a_{c+j} with a generous padding.
long long delta_oracle(const AlexanderCoefficients& c, long long q, long long i) {
    long long fl;
    if (i >= 0) fl = i / q;
    else {
        fl = i / q;
        if (i % q != 0) --fl;
    }
    long long cidx = fl < 0 ? -fl : fl;
    long long total = 0;
    for (long long j = 1; j <= 64; ++j) total += j * c.at(static_cast<std::size_t>(cidx + j));
    return -2 * total;
}

// Enumerate all vectors of the given length with entries in {-1,0,1}.
template <typename F>
void for_each_vector(std::size_t len, F&& f) {
    std::vector<long long> v(len, -1);
    while (true) {
        f(v);
        std::size_t pos = 0;
        while (pos < len && ++v[pos] > 1) v[pos++] = -1;
        if (pos == len) break;
    }
}

}  // namespace

TEST_CASE("coefficient normalization") {
    AlexanderCoefficients c({1, 0, -1, 0, 0});
    CHECK(c.genus() == 2);
    CHECK(c.a == std::vector<long long>{1, 0, -1});
    CHECK(AlexanderCoefficients({0, 0}).genus() == 0);
    CHECK(AlexanderCoefficients(std::vector<long long>{}).a == std::vector<long long>{0});
    CHECK(c.at(7) == 0);
}

TEST_CASE("alternating test on the worked examples") {
    CHECK(dsg::lspace_alternating_test(AlexanderCoefficients({-1, 1})));
    CHECK_FALSE(dsg::lspace_alternating_test(AlexanderCoefficients({1, -2, 1})));
    // scan a_3, a_2, a_1, a_0 = 1, -1, 0, 1: signs +, -, + alternate
    CHECK(dsg::lspace_alternating_test(AlexanderCoefficients({1, 0, -1, 1})));
    CHECK(dsg::lspace_alternating_test(AlexanderCoefficients({0})));
    CHECK_FALSE(dsg::lspace_alternating_test(AlexanderCoefficients({1, 1})));
}

TEST_CASE("alternating test accepts torus-knot shapes and rejects big entries") {
    for (std::size_t g = 1; g <= 8; ++g) {
        std::vector<long long> v(g + 1);
        int sign = 1;  // a_g = +1 downward alternation
        for (std::size_t k = g + 1; k-- > 0;) {
            v[k] = sign;
            sign = -sign;
        }
        CHECK(dsg::lspace_alternating_test(AlexanderCoefficients(v)));
        v[g / 2] = 2;
        CHECK_FALSE(dsg::lspace_alternating_test(AlexanderCoefficients(v)));
    }
}

TEST_CASE("alternating test matches the oracle on every vector of degree <= 6") {
    for_each_vector(7, [&](const std::vector<long long>& v) {
        AlexanderCoefficients c(v);
        // the oracle reads the trimmed vector too (trailing zeros removed)
        CHECK(dsg::lspace_alternating_test(c) == alternating_oracle(c.a));
    });
}

TEST_CASE("correction delta on the worked examples") {
    CHECK(dsg::correction_delta(AlexanderCoefficients({0}), 25, 1, 0) == 0);
    // a_1 = 1 only, c = 0: -2 * 1 * a_1 = -2
    CHECK(dsg::correction_delta(AlexanderCoefficients({0, 1}), 25, 1, 0) == -2);
    // a = [1,-1,1], 25/1 surgery, i = 0: -2(1*(-1) + 2*1) = -2
    CHECK(dsg::correction_delta(AlexanderCoefficients({1, -1, 1}), 25, 1, 0) == -2);
}

TEST_CASE("correction delta domain checks and floor behavior") {
    AlexanderCoefficients c({1, -1, 1});
    CHECK_THROWS_AS(dsg::correction_delta(c, 25, 1, 13), dsg::domain_error);
    CHECK_THROWS_AS(dsg::correction_delta(c, 25, 1, -13), dsg::domain_error);
    CHECK_THROWS_AS(dsg::correction_delta(c, 25, 0, 0), dsg::domain_error);
    CHECK_THROWS_AS(dsg::correction_delta(c, -25, 1, 0), dsg::domain_error);
    CHECK_NOTHROW(dsg::correction_delta(c, 25, 1, 12));
    CHECK_NOTHROW(dsg::correction_delta(c, 25, 1, -12));
    // c = |floor(i/q)|: i = -3, q = 2 -> |floor(-1.5)| = 2
    CHECK(dsg::correction_delta(AlexanderCoefficients({0, 0, 0, 1}), 25, 2, -3) ==
          -2 * 1 * 1);  // only a_{2+1} contributes with j = 1
}

TEST_CASE("correction delta matches the oracle exhaustively") {
    for (long long q : {1, 2, 5, 25}) {
        for_each_vector(7, [&](const std::vector<long long>& v) {
            AlexanderCoefficients c(v);
            for (long long i = -12; i <= 12; ++i)
                REQUIRE(dsg::correction_delta(c, 25, q, i) == delta_oracle(c, q, i));
        });
    }
}

TEST_CASE("correction delta is linear in the coefficients") {
    // delta(a + b) = delta(a) + delta(b) whenever the sum stays within range
    AlexanderCoefficients a({0, 1, 0, -1});
    AlexanderCoefficients b({0, 0, 1, 0, 1});
    std::vector<long long> sum = {0, 1, 1, -1, 1};
    for (long long i = -12; i <= 12; ++i)
        CHECK(dsg::correction_delta(AlexanderCoefficients(sum), 25, 1, i) ==
              dsg::correction_delta(a, 25, 1, i) + dsg::correction_delta(b, 25, 1, i));
}

TEST_CASE("obstruction budget genus caps") {
    CHECK(dsg::obstruction_budget(1).genus_cap == 13);
    CHECK(dsg::obstruction_budget(2).genus_cap == 6);
    CHECK(dsg::obstruction_budget(25).genus_cap == 1);
    CHECK(dsg::obstruction_budget(26).genus_cap == 0);  // 25/q < 1: unknot only
    CHECK(dsg::obstruction_budget(26).budget == 0);
    CHECK_THROWS_AS(dsg::obstruction_budget(0), dsg::domain_error);
}

TEST_CASE("obstruction budget values and monotonicity") {
    long long prev = -1;
    std::vector<long long> budgets;
    for (long long q : {25, 13, 8, 5, 3, 2, 1}) {
        dsg::ObstructionBudget b = dsg::obstruction_budget(q);
        CHECK(b.budget >= prev);  // non-decreasing as q decreases
        prev = b.budget;
        budgets.push_back(b.budget);
    }
    // regression constants from the exhaustive enumeration: B = 2 * genus cap,
    // attained by the single spike a_g = +-1 at i = 0
    CHECK(budgets == std::vector<long long>{2, 2, 4, 6, 8, 12, 26});

    dsg::ObstructionBudget b1 = dsg::obstruction_budget(1);
    CHECK(b1.budget == 26);
    CHECK(b1.vectors_checked == 2 * (1u << 14) - 1);
    CHECK(dsg::lspace_alternating_test(b1.worst));
    long long worst = dsg::correction_delta(b1.worst, 25, 1, b1.worst_i);
    CHECK((worst == 26 || worst == -26));
}
