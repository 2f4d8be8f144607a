// The singular-value oracle is validated on its own terms before anything
// downstream leans on it.

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "dilkit/prng.hpp"
#include "dilkit/svd2x2.hpp"
#include "test_support.hpp"

using namespace dilkit;
using dilkit::test::check_close;

namespace {
const double pi = std::numbers::pi;
}

TEST_CASE("svd of simple maps") {
    Svd2x2 d = svd2x2(RealLinearMap::diagonal(2.0, 1.0));
    CHECK(d.sigma_max == 2.0);
    CHECK(d.sigma_min == 1.0);
    CHECK(d.max_direction == 0.0);

    Svd2x2 id = svd2x2(RealLinearMap::identity());
    CHECK(id.sigma_max == 1.0);
    CHECK(id.sigma_min == 1.0);

    // multiplication maps are conformal: equal singular values
    Svd2x2 m = svd2x2(RealLinearMap::multiplication({3.0, 4.0}));
    check_close(m.sigma_max, 5.0, 1e-14);
    check_close(m.sigma_min, 5.0, 1e-14);
}

TEST_CASE("conjugated stretch reports the rotated direction") {
    Splitmix64 rng(101);
    for (int i = 0; i < 200; ++i) {
        double theta = rng.uniform(-pi / 2 + 0.01, pi / 2 - 0.01);
        RealLinearMap map =
            compose(RealLinearMap::rotation(theta),
                    compose(RealLinearMap::diagonal(3.0, 0.5),
                            RealLinearMap::rotation(-theta)));
        Svd2x2 svd = svd2x2(map);
        check_close(svd.sigma_max, 3.0, 1e-12);
        check_close(svd.sigma_min, 0.5, 1e-12);
        check_close(svd.max_direction, theta, 1e-12);
    }
}

TEST_CASE("singular values bound the stretch over sampled directions") {
    Splitmix64 rng(103);
    for (int i = 0; i < 100; ++i) {
        RealLinearMap map{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0),
                          rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        Svd2x2 svd = svd2x2(map);

        CHECK(svd.sigma_max >= svd.sigma_min);
        CHECK(svd.sigma_min >= 0.0);
        check_close(svd.sigma_max * svd.sigma_min, std::abs(map.det()),
                    1e-9);

        // the reported direction achieves the max stretch
        Complex v = std::polar(1.0, svd.max_direction);
        check_close(std::abs(map(v)), svd.sigma_max, 1e-9);
        // and its orthogonal complement achieves the min
        Complex w = std::polar(1.0, svd.max_direction + pi / 2);
        check_close(std::abs(map(w)), svd.sigma_min, 1e-9);

        // coarse sweep never exceeds sigma_max
        for (int k = 0; k < 64; ++k) {
            Complex dir = std::polar(1.0, 2.0 * pi * k / 64);
            CHECK(std::abs(map(dir)) <= svd.sigma_max * (1.0 + 1e-12));
        }
    }
}
