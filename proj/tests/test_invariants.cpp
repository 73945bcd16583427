#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lfforge/char_numbers.hpp"
#include "lfforge/errors.hpp"

using namespace lfforge;

TEST_CASE("from_e_sigma populates all four numbers consistently") {
    SUBCASE("elliptic surface numbers") {
        const CharNumbers c = from_e_sigma(12, -8);
        CHECK(c.chi_h == Rational(1));
        CHECK(c.c1_sq == 0);
        CHECK(c.integral_chi);
    }
    SUBCASE("zero manifold") {
        const CharNumbers c = from_e_sigma(0, 0);
        CHECK(c.chi_h == Rational(0));
        CHECK(c.c1_sq == 0);
    }
    SUBCASE("x-family instance") {
        const CharNumbers c = from_e_sigma(24, -24);
        CHECK(c.chi_h == Rational(0));
        CHECK(c.c1_sq == -24);
    }
    SUBCASE("non-integral chi_h is flagged, not rejected") {
        const CharNumbers c = from_e_sigma(1, 0);
        CHECK(c.chi_h == Rational(1, 4));
        CHECK_FALSE(c.integral_chi);
        CHECK(c.c1_sq == 2);
    }
}

TEST_CASE("from_chi_c1 inverts the two identities") {
    SUBCASE("chi_h = n, c1_sq = 0") {
        const CharNumbers c = from_chi_c1(Rational(2), 0);
        CHECK(c.e == 24);
        CHECK(c.sigma == -16);
    }
    SUBCASE("zero") {
        const CharNumbers c = from_chi_c1(Rational(0), 0);
        CHECK(c.e == 0);
        CHECK(c.sigma == 0);
    }
    SUBCASE("(0, -36)") {
        const CharNumbers c = from_chi_c1(Rational(0), -36);
        CHECK(c.e == 36);
        CHECK(c.sigma == -36);
    }
    SUBCASE("non-integral e or sigma rejected") {
        CHECK_THROWS_AS(from_chi_c1(Rational(1, 3), 0), NonIntegralInvariant);
        CHECK_THROWS_AS(from_chi_c1(Rational(1, 12), 0), NonIntegralInvariant);
        CHECK_THROWS_AS(from_chi_c1(Rational(1, 5), 0), NonIntegralInvariant);
        // quarter-integral chi_h with matching c1_sq is fine
        const CharNumbers c = from_chi_c1(Rational(1, 4), 0);
        CHECK(c.e == 3);
        CHECK(c.sigma == -2);
        CHECK_FALSE(c.integral_chi);
    }
}

TEST_CASE("fiber_sum") {
    const CharNumbers e1 = from_e_sigma(12, -8);
    SUBCASE("two elliptic surfaces along a torus") {
        const CharNumbers c = fiber_sum(e1, e1, 1);
        CHECK(c.e == 24);
        CHECK(c.sigma == -16);
        CHECK(c.chi_h == Rational(2));
        CHECK(c.c1_sq == 0);
    }
    SUBCASE("zero plus zero along a torus is zero") {
        const CharNumbers z = from_e_sigma(0, 0);
        CHECK(fiber_sum(z, z, 1) == z);
    }
    SUBCASE("genus-7 sum of the two reference building blocks") {
        const CharNumbers x = from_e_sigma(24, -24);
        const CharNumbers y = from_e_sigma(24, -16);
        const CharNumbers c = fiber_sum(x, y, 7);
        CHECK(c.c1_sq == 24);
        CHECK(c.chi_h == Rational(8));
        CHECK(c.e == 72);
        CHECK(c.sigma == -40);
    }
    SUBCASE("genus below one rejected") {
        CHECK_THROWS_AS(fiber_sum(e1, e1, 0), GenusOutOfRange);
        CHECK_THROWS_AS(fiber_sum(e1, e1, -3), GenusOutOfRange);
    }
}

TEST_CASE("identities hold across the full grid |e|,|sigma| <= 200") {
    for (long long e = -200; e <= 200; ++e) {
        for (long long sigma = -200; sigma <= 200; ++sigma) {
            const CharNumbers c = from_e_sigma(e, sigma);
            REQUIRE(c.c1_sq - 3 * c.sigma - 2 * c.e == 0);
            REQUIRE(Rational(4) * c.chi_h - Rational(c.e) - Rational(c.sigma) == Rational(0));
            REQUIRE(c.integral_chi == ((e + sigma) % 4 == 0));
            // round trip through the inverse constructor
            const CharNumbers back = from_chi_c1(c.chi_h, c.c1_sq);
            REQUIRE(back == c);
        }
    }
}

TEST_CASE("fiber_sum: routes agree, commutative, associative") {
    std::mt19937 rng(811);
    std::uniform_int_distribution<long long> es(-200, 200);
    std::uniform_int_distribution<long long> genus(1, 20);
    for (int trial = 0; trial < 1000; ++trial) {
        const CharNumbers x = from_e_sigma(es(rng), es(rng));
        const CharNumbers y = from_e_sigma(es(rng), es(rng));
        const long long g = genus(rng);
        const CharNumbers sum = fiber_sum(x, y, g);

        // independent route: the c1^2 / chi_h addition formulas
        const CharNumbers via_chi =
            from_chi_c1(x.chi_h + y.chi_h + Rational(g - 1),
                        x.c1_sq + y.c1_sq + 8 * (g - 1));
        REQUIRE(sum == via_chi);

        REQUIRE(sum == fiber_sum(y, x, g));

        const CharNumbers z = from_e_sigma(es(rng), es(rng));
        REQUIRE(fiber_sum(fiber_sum(x, y, g), z, g) == fiber_sum(x, fiber_sum(y, z, g), g));
    }
}
