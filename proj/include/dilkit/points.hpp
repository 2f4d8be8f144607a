#pragma once

#include <optional>

#include "dilkit/types.hpp"

namespace dilkit {

/// Point of the open unit disc in the Klein model.
///
/// boundary_gap caches 1 - |value| to full relative accuracy when the
/// producer knows it better than the rounded value can express; near the
/// boundary the gap of a bare double loses all relative precision, which
/// would otherwise dominate round trips through the Poincare model.
struct KleinPoint {
    Complex value{0.0, 0.0};
    std::optional<double> boundary_gap{};
};

/// Point of the open unit disc in the Poincare model.
struct PoincarePoint {
    Complex value{0.0, 0.0};
};

/// Point of the open upper unit hemisphere: |x|^2 + w^2 = 1, w > 0.
struct HemispherePoint {
    Complex x{0.0, 0.0};
    double w = 1.0;
};

} // namespace dilkit
