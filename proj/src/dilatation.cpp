#include "dilkit/dilatation.hpp"

#include <cmath>

#include "dilkit/angles.hpp"
#include "dilkit/errors.hpp"
#include "dilkit/models.hpp"

namespace dilkit {

WirtingerPair wirtinger(const RealLinearMap& map) {
    // Columns as complex numbers: T(1) = m11 + i m21, T(i) = m12 + i m22.
    return {{(map.m11 + map.m22) / 2.0, (map.m21 - map.m12) / 2.0},
            {(map.m11 - map.m22) / 2.0, (map.m21 + map.m12) / 2.0}};
}

PoincarePoint classical_mu(const RealLinearMap& map) {
    require_orientation_preserving(map);
    WirtingerPair w = wirtinger(map);
    return {w.t_zbar / w.t_z};
}

AxisData axis_data(const RealLinearMap& map) {
    require_orientation_preserving(map);
    WirtingerPair w = wirtinger(map);
    double big = std::abs(w.t_z);
    double small = std::abs(w.t_zbar);
    double ratio = (big + small) / (big - small);
    if (ratio - 1.0 <= 1e-12)
        return {ratio, 0.0, false};
    DiagonalForm d = diagonalize(pullback(map, norm_form()));
    return {ratio, wrap_direction(-d.theta), true};
}

PoincarePoint poincare_invariant(const QuadraticForm& q, double tol) {
    return klein_to_poincare(klein_point(q, tol));
}

PoincarePoint poincare_dilatation(const RealLinearMap& map) {
    require_orientation_preserving(map);
    QuadraticForm q = pullback(map, norm_form());
    TrsCoordinates trs = trs_coordinates(q);
    Complex z{trs.r, trs.s};
    double zmod = std::abs(z);
    if (zmod == 0.0)
        return {Complex{0.0, 0.0}};
    // gamma^2 = (t - |z|) / (t + |z|); the numerator cancels badly for
    // near-singular maps, but (t - |z|)(t + |z|) = det(T)^2 exactly,
    // which gives gamma without forming the difference.
    double gamma = map.det() / (trs.t + zmod);
    return {(1.0 - gamma) / (1.0 + gamma) * (z / zmod)};
}

} // namespace dilkit
