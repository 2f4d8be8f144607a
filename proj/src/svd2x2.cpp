#include "dilkit/svd2x2.hpp"

#include <cmath>

#include "dilkit/angles.hpp"

namespace dilkit {

Svd2x2 svd2x2(const RealLinearMap& map) {
    const double m11 = map.m11, m12 = map.m12, m21 = map.m21, m22 = map.m22;
    const double det = map.det();

    // Gram matrix M^T M = [[g11, g12], [g12, g22]].
    const double g11 = m11 * m11 + m21 * m21;
    const double g22 = m12 * m12 + m22 * m22;
    const double g12 = m11 * m12 + m21 * m22;

    const double trace = g11 + g22;
    const double spread = std::sqrt(
        std::max(0.0, trace * trace - 4.0 * det * det));
    const double lambda_max = (trace + spread) / 2.0;
    const double lambda_min =
        lambda_max > 0.0 ? (det * det) / lambda_max : 0.0;

    Svd2x2 out;
    out.sigma_max = std::sqrt(lambda_max);
    out.sigma_min = std::sqrt(lambda_min);

    // Top right-singular vector: eigenvector of the Gram matrix for
    // lambda_max, taken from the better-conditioned row.
    double vx, vy;
    if (std::abs(g11 - lambda_max) > std::abs(g22 - lambda_max)) {
        vx = g12;
        vy = lambda_max - g11;
    } else {
        vx = lambda_max - g22;
        vy = g12;
    }
    out.max_direction =
        (vx == 0.0 && vy == 0.0) ? 0.0 : wrap_direction(std::atan2(vy, vx));
    return out;
}

} // namespace dilkit
