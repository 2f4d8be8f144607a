#pragma once

#include <cmath>
#include <numbers>

namespace dilkit {

/// Wraps an angle that is only meaningful modulo pi (a direction)
/// into the principal range (-pi/2, pi/2].
inline double wrap_direction(double theta) {
    const double pi = std::numbers::pi;
    theta = std::remainder(theta, pi);
    if (theta <= -pi / 2)
        theta += pi;
    else if (theta > pi / 2)
        theta -= pi;
    return theta;
}

/// Signed difference x - y wrapped into (-pi, pi].
inline double angle_difference(double x, double y) {
    const double pi = std::numbers::pi;
    double d = std::remainder(x - y, 2 * pi);
    if (d <= -pi)
        d += 2 * pi;
    return d;
}

} // namespace dilkit
