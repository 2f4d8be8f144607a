#pragma once

#include "dilkit/forms.hpp"
#include "dilkit/linear_map.hpp"
#include "dilkit/points.hpp"

namespace dilkit {

/// Complex-linear / conjugate-linear split of a real linear map:
/// T(z) = t_z * z + t_zbar * conj(z).
struct WirtingerPair {
    Complex t_z{1.0, 0.0};
    Complex t_zbar{0.0, 0.0};
};

/// Axis ratio of the image ellipse of the unit circle, together with
/// the domain direction achieving the maximal stretch.
struct AxisData {
    double ratio = 1.0;
    double alpha = 0.0;
    /// False when the map is conformal within tolerance; alpha is then
    /// reported as 0 but carries no information.
    bool alpha_defined = true;
};

WirtingerPair wirtinger(const RealLinearMap& map);

/// Classical complex dilatation t_zbar / t_z of an orientation-preserving
/// invertible map. Raises Error{singular} or Error{orientation_reversing}.
PoincarePoint classical_mu(const RealLinearMap& map);

/// ratio = (|t_z| + |t_zbar|) / (|t_z| - |t_zbar|) >= 1; alpha in
/// (-pi/2, pi/2] is found by diagonalizing the pullback of |z|^2.
AxisData axis_data(const RealLinearMap& map);

/// Poincare-model coordinate of the conformal class of a definite form.
PoincarePoint poincare_invariant(const QuadraticForm& q,
                                 double tol = structural_tolerance());

/// Poincare dilatation of the map: the pullback of the standard structure,
/// read off in the Poincare model. Equals classical_mu on its domain.
PoincarePoint poincare_dilatation(const RealLinearMap& map);

} // namespace dilkit
