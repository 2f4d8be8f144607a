#include <cmath>
#include <numbers>

#include <doctest.h>

#include "dilkit/errors.hpp"
#include "dilkit/models.hpp"
#include "dilkit/prng.hpp"
#include "test_support.hpp"

using namespace dilkit;
using dilkit::test::check_close;

namespace {
const double pi = std::numbers::pi;
}

TEST_CASE("hemisphere lift") {
    HemispherePoint pole = hemisphere_lift(KleinPoint{});
    check_close(pole.x, {0.0, 0.0}, 0.0);
    CHECK(pole.w == 1.0);

    HemispherePoint h = hemisphere_lift(KleinPoint{{0.6, 0.0}});
    check_close(h.x, {0.6, 0.0}, 0.0);
    check_close(h.w, 0.8, 1e-15);

    HemispherePoint hi = hemisphere_lift(KleinPoint{{0.0, 0.6}});
    check_close(hi.w, 0.8, 1e-15);

    SUBCASE("lies on the sphere, projection recovers the point") {
        Splitmix64 rng(3);
        for (int i = 0; i < 300; ++i) {
            KleinPoint p{random_disc_point(rng)};
            HemispherePoint lifted = hemisphere_lift(p);
            CHECK(lifted.w > 0.0);
            check_close(std::norm(lifted.x) + lifted.w * lifted.w, 1.0,
                        1e-12);
            check_close(lifted.x, p.value, 0.0);
        }
    }
    SUBCASE("rejects points outside") {
        CHECK_THROWS_AS((void)hemisphere_lift(KleinPoint{{1.0, 0.0}}), Error);
    }
}

TEST_CASE("stereographic projection") {
    check_close(stereographic({{0.0, 0.0}, 1.0}).value, {0.0, 0.0}, 0.0);
    check_close(stereographic({{0.6, 0.0}, 0.8}).value, {1.0 / 3.0, 0.0},
                1e-15);

    // the hemisphere point parameterized by gamma = 1/2
    double g = 0.5;
    HemispherePoint h{{(1 - g * g) / (1 + g * g), 0.0}, 2 * g / (1 + g * g)};
    check_close(stereographic(h).value, {(1 - g) / (1 + g), 0.0}, 1e-15);
}

TEST_CASE("klein to poincare") {
    check_close(klein_to_poincare(KleinPoint{}).value, {0.0, 0.0}, 0.0);
    check_close(klein_to_poincare(KleinPoint{{0.6, 0.0}}).value,
                {1.0 / 3.0, 0.0}, 1e-15);

    SUBCASE("rotation equivariance") {
        Splitmix64 rng(5);
        for (int i = 0; i < 300; ++i) {
            double phi = rng.uniform(0.0, 2.0 * pi);
            Complex sigma = std::polar(1.0, phi);
            Complex p = random_disc_point(rng);
            Complex lhs = klein_to_poincare(KleinPoint{sigma * p}).value;
            Complex rhs = sigma * klein_to_poincare(KleinPoint{p}).value;
            check_close(lhs, rhs, 1e-13);
        }
    }
    SUBCASE("radial, contracting") {
        Splitmix64 rng(9);
        for (int i = 0; i < 300; ++i) {
            Complex p = random_disc_point(rng);
            if (std::abs(p) < 1e-6)
                continue;
            Complex mu = klein_to_poincare(KleinPoint{p}).value;
            CHECK(std::abs(mu) < std::abs(p));
            check_close(std::arg(mu), std::arg(p), 1e-13);
        }
    }
    SUBCASE("agrees with the hemisphere construction") {
        Splitmix64 rng(15);
        for (int i = 0; i < 1000; ++i) {
            KleinPoint p{random_disc_point(rng)};
            Complex direct = klein_to_poincare(p).value;
            Complex through_sphere = stereographic(hemisphere_lift(p)).value;
            check_close(direct, through_sphere, 1e-13);
        }
    }
    SUBCASE("rejects the boundary") {
        CHECK_THROWS_AS((void)klein_to_poincare(KleinPoint{{0.0, 1.0}}),
                        Error);
    }
}

TEST_CASE("poincare to klein") {
    check_close(poincare_to_klein(PoincarePoint{}).value, {0.0, 0.0}, 0.0);
    check_close(poincare_to_klein(PoincarePoint{{1.0 / 3.0, 0.0}}).value,
                {0.6, 0.0}, 1e-15);
    check_close(poincare_to_klein(PoincarePoint{{0.0, 0.5}}).value,
                {0.0, 0.8}, 1e-15);

    SUBCASE("two-sided inverse of klein_to_poincare") {
        Splitmix64 rng(21);
        for (int i = 0; i < 2000; ++i) {
            Complex p = random_disc_point(rng);
            Complex back =
                poincare_to_klein(klein_to_poincare(KleinPoint{p})).value;
            check_close(back, p, 1e-12);
            Complex forward =
                klein_to_poincare(poincare_to_klein(PoincarePoint{p})).value;
            check_close(forward, p, 1e-12);
        }
    }
    SUBCASE("cached boundary gap matches the value") {
        Splitmix64 rng(27);
        for (int i = 0; i < 300; ++i) {
            Complex mu = random_disc_point(rng);
            KleinPoint k = poincare_to_klein(PoincarePoint{mu});
            REQUIRE(k.boundary_gap.has_value());
            double direct = 1.0 - std::abs(k.value);
            CHECK(std::abs(*k.boundary_gap - direct) <=
                  1e-15 + 1e-10 * direct);
        }
    }
    SUBCASE("rejects the boundary") {
        CHECK_THROWS_AS((void)poincare_to_klein(PoincarePoint{{-1.0, 0.0}}),
                        Error);
    }
}

TEST_CASE("poincare distance") {
    CHECK(poincare_distance(PoincarePoint{}, PoincarePoint{}) == 0.0);
    check_close(
        poincare_distance(PoincarePoint{}, PoincarePoint{{1.0 / 3.0, 0.0}}),
        std::log(2.0), 1e-14);

    Splitmix64 rng(33);
    for (int i = 0; i < 300; ++i) {
        PoincarePoint mu{random_disc_point(rng)};
        PoincarePoint nu{random_disc_point(rng)};
        double d = poincare_distance(mu, nu);
        CHECK(d >= 0.0);
        check_close(d, poincare_distance(nu, mu), 1e-12);
        CHECK(poincare_distance(mu, mu) == 0.0);
    }
}

TEST_CASE("near boundary flag") {
    CHECK(!near_boundary({0.5, 0.0}));
    CHECK(near_boundary({1.0 - 1e-13, 0.0}));
    CHECK(near_boundary({0.0, 1.0 - 1e-14}));
}
