#pragma once

#include "dilkit/points.hpp"

namespace dilkit {

/// Vertical lift of a Klein point onto the upper unit hemisphere.
HemispherePoint hemisphere_lift(const KleinPoint& p);

/// Stereographic projection of the hemisphere onto the equatorial disc
/// from the south pole (0, -1).
PoincarePoint stereographic(const HemispherePoint& h);

/// The canonical Klein -> Poincare isomorphism, in radial closed form.
/// Agrees with stereographic(hemisphere_lift(p)) and is radial:
/// the argument is preserved, the modulus contracts.
PoincarePoint klein_to_poincare(const KleinPoint& p);

/// Inverse isomorphism mu |-> 2*mu / (1 + |mu|^2).
KleinPoint poincare_to_klein(const PoincarePoint& mu);

/// Hyperbolic distance of the Poincare model,
/// 2*artanh |(mu1 - mu2) / (1 - conj(mu2)*mu1)|.
double poincare_distance(const PoincarePoint& mu1, const PoincarePoint& mu2);

/// Points at modulus >= 1 - 1e-12 are still accepted by the model maps;
/// the CLI marks them in its output.
bool near_boundary(Complex value);

} // namespace dilkit
