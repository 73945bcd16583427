#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "lfforge/errors.hpp"
#include "lfforge/fibrations.hpp"

using namespace lfforge;

namespace {

// A synthetic descriptor satisfying the Euler-count invariant, for tests
// that need pairs the two families never produce.
FibrationDescriptor synthetic(long long fiber_genus, long long s, long long sigma) {
    FibrationDescriptor f;
    f.fiber_genus = fiber_genus;
    f.singular_fibers = s;
    f.all_nonseparating = true;
    f.total = from_e_sigma(2 * (2 - 2 * fiber_genus) + s, sigma);
    f.label = "synthetic";
    return f;
}

}  // namespace

TEST_CASE("x_family") {
    SUBCASE("(5,2)") {
        const FibrationDescriptor f = x_family(5, 2);
        CHECK(f.fiber_genus == 7);
        CHECK(f.singular_fibers == 48);
        CHECK(f.all_nonseparating);
        CHECK(f.total.e == 24);
        CHECK(f.total.sigma == -24);
        CHECK(f.total.chi_h == Rational(0));
        CHECK(f.total.c1_sq == -24);
        CHECK(f.label == "X(5,2)");
    }
    SUBCASE("(8,2)") {
        const FibrationDescriptor f = x_family(8, 2);
        CHECK(f.fiber_genus == 10);
        CHECK(f.singular_fibers == 72);
        CHECK(f.total.e == 36);
        CHECK(f.total.sigma == -36);
        CHECK(f.total.chi_h == Rational(0));
        CHECK(f.total.c1_sq == -36);
    }
    SUBCASE("(2,2) smallest admissible") {
        const FibrationDescriptor f = x_family(2, 2);
        CHECK(f.fiber_genus == 4);
        CHECK(f.singular_fibers == 24);
        CHECK(f.total.e == 12);
        CHECK(f.total.sigma == -12);
        CHECK(f.total.chi_h == Rational(0));
        CHECK(f.total.c1_sq == -12);
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(x_family(1, 2), ParamOutOfRange);
        CHECK_THROWS_AS(x_family(5, 0), ParamOutOfRange);
        CHECK_THROWS_AS(x_family(5, 3), ParamOutOfRange);  // odd k
        CHECK_THROWS_AS(x_family(5, -2), ParamOutOfRange);
    }
}

TEST_CASE("elliptic_surface") {
    CHECK(elliptic_surface(1) == from_e_sigma(12, -8));
    const CharNumbers e2 = elliptic_surface(2);
    CHECK(e2.e == 24);
    CHECK(e2.sigma == -16);
    CHECK(e2.chi_h == Rational(2));
    CHECK(e2.c1_sq == 0);
    const CharNumbers e3 = elliptic_surface(3);
    CHECK(e3.e == 36);
    CHECK(e3.sigma == -24);
    CHECK(e3.chi_h == Rational(3));
    CHECK(e3.c1_sq == 0);
    CHECK_THROWS_AS(elliptic_surface(0), ParamOutOfRange);
}

TEST_CASE("knot_surgered_fibration") {
    SUBCASE("(2,3)") {
        const FibrationDescriptor f = knot_surgered_fibration(2, 3);
        CHECK(f.fiber_genus == 7);
        CHECK(f.singular_fibers == 48);
        CHECK(f.total.e == 24);
        CHECK(f.total.sigma == -16);
        CHECK(f.all_nonseparating);
        CHECK(f.label == "E(2)_K[g=3]");
    }
    SUBCASE("(2,0): trivial knot leaves the elliptic fibration count") {
        const FibrationDescriptor f = knot_surgered_fibration(2, 0);
        CHECK(f.fiber_genus == 1);
        CHECK(f.singular_fibers == 24);
        CHECK(f.total.e == 24);
    }
    SUBCASE("(3,4)") {
        const FibrationDescriptor f = knot_surgered_fibration(3, 4);
        CHECK(f.fiber_genus == 10);
        CHECK(f.singular_fibers == 72);
        CHECK(f.total.e == 36);
        CHECK(f.total.sigma == -24);
    }
    SUBCASE("n below two rejected with the dedicated error") {
        CHECK_THROWS_AS(knot_surgered_fibration(1, 2), NOrderTooSmall);
        CHECK_THROWS_AS(knot_surgered_fibration(1, 2), ParamOutOfRange);  // subtype
        CHECK_THROWS_AS(knot_surgered_fibration(2, -1), ParamOutOfRange);
    }
}

TEST_CASE("equivalent") {
    CHECK(equivalent(x_family(5, 2), knot_surgered_fibration(2, 3)));
    const FibrationDescriptor f = x_family(3, 4);
    CHECK(equivalent(f, f));
    CHECK_FALSE(equivalent(x_family(5, 2), knot_surgered_fibration(2, 2)));

    SUBCASE("separating fibers break equivalence") {
        FibrationDescriptor sep = synthetic(7, 48, -24);
        sep.all_nonseparating = false;
        CHECK_FALSE(equivalent(sep, x_family(5, 2)));
        CHECK_FALSE(equivalent(sep, sep));
    }

    SUBCASE("equivalence relation on nonseparating descriptors") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<long long> genus(1, 3);
        std::uniform_int_distribution<long long> fibers(1, 3);
        std::uniform_int_distribution<long long> sig(-4, 4);
        std::vector<FibrationDescriptor> ds;
        for (int i = 0; i < 40; ++i)
            ds.push_back(synthetic(genus(rng), fibers(rng), sig(rng)));
        for (const auto& a : ds) {
            CHECK(equivalent(a, a));
            for (const auto& b : ds) {
                CHECK(equivalent(a, b) == equivalent(b, a));
                for (const auto& c : ds)
                    if (equivalent(a, b) && equivalent(b, c)) CHECK(equivalent(a, c));
            }
        }
    }
}

TEST_CASE("glue_difference") {
    SUBCASE("the (5,2) construction") {
        const SurfaceBundle y = glue_difference(x_family(5, 2), knot_surgered_fibration(2, 3));
        CHECK(y.fiber_genus == 7);
        CHECK(y.base_genus == 47);
        CHECK(y.sigma == -8);
        CHECK(y.e == (2 - 2 * 47) * (2 - 2 * 7));
    }
    SUBCASE("self-difference kills signature") {
        const FibrationDescriptor f = x_family(4, 6);
        CHECK(glue_difference(f, f).sigma == 0);
    }
    SUBCASE("the (8,2) construction") {
        const SurfaceBundle y = glue_difference(x_family(8, 2), knot_surgered_fibration(3, 4));
        CHECK(y.fiber_genus == 10);
        CHECK(y.base_genus == 71);
        CHECK(y.sigma == -12);
    }
    SUBCASE("non-equivalent inputs rejected") {
        CHECK_THROWS_AS(glue_difference(x_family(5, 2), knot_surgered_fibration(2, 2)),
                        NotEquivalent);
    }
}

TEST_CASE("descriptor Euler counts match the fibration formula") {
    for (long long h = 2; h <= 12; ++h)
        for (long long k = 2; k <= 12; k += 2) {
            const FibrationDescriptor f = x_family(h, k);
            REQUIRE(f.total.e == 2 * (2 - 2 * f.fiber_genus) + f.singular_fibers);
        }
    for (long long n = 2; n <= 8; ++n)
        for (long long g = 0; g <= 6; ++g) {
            const FibrationDescriptor f = knot_surgered_fibration(n, g);
            REQUIRE(f.total.e == 2 * (2 - 2 * f.fiber_genus) + f.singular_fibers);
        }
}

TEST_CASE("gluing identities on synthetic equivalent pairs") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long long> genus(1, 9);
    std::uniform_int_distribution<long long> fibers(1, 60);
    std::uniform_int_distribution<long long> sig(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const long long gp = genus(rng);
        const long long s = fibers(rng);
        const FibrationDescriptor f1 = synthetic(gp, s, sig(rng));
        const FibrationDescriptor f2 = synthetic(gp, s, sig(rng));

        // removing s fiber neighborhoods (each of Euler count 3-2g') from
        // both sides must account for the whole bundle
        REQUIRE(f1.total.e + f2.total.e - 2 * s * (3 - 2 * gp) == (4 - 2 * s) * (2 - 2 * gp));

        const SurfaceBundle y12 = glue_difference(f1, f2);
        const SurfaceBundle y21 = glue_difference(f2, f1);
        REQUIRE(y12.e == (2 - 2 * y12.base_genus) * (2 - 2 * y12.fiber_genus));
        REQUIRE(y12.sigma == -y21.sigma);
        REQUIRE(y12.base_genus == s - 1);
    }
}
