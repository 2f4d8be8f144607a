#pragma once

#include "dilkit/linear_map.hpp"

namespace dilkit {

/// Singular values of a 2x2 real matrix and the domain direction of the
/// top right-singular vector, normalized to (-pi/2, pi/2].
///
/// Closed form on the Gram matrix; kept free of the quadratic-form and
/// Wirtinger code paths so it can serve as an independent check on them.
struct Svd2x2 {
    double sigma_max = 1.0;
    double sigma_min = 1.0;
    double max_direction = 0.0;
};

Svd2x2 svd2x2(const RealLinearMap& map);

} // namespace dilkit
