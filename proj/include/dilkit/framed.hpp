#pragma once

#include "dilkit/linear_map.hpp"
#include "dilkit/points.hpp"

namespace dilkit {

/// A 1-dimensional complex space presented by the coordinate of a chosen
/// basis vector relative to an ambient reference frame.
struct FramedLine {
    Complex basis{1.0, 0.0};

    static FramedLine reference() { return {}; }
};

/// Coefficient of the dilatation tensor expressed in the reference frame.
/// Identical for every basis used to compute it.
struct DilatationTensor {
    Complex coeff{0.0, 0.0};
};

/// Coordinate of w in the basis of the line: w / basis.
Complex coordinate_map(const FramedLine& line, Complex w);

/// Squared modulus of the basis coordinate, |w / basis|^2. Scales by
/// |a|^-2 when the basis is scaled by a.
double form_qv(const FramedLine& line, Complex w);

/// Dilatation of T read through the chosen source and target bases;
/// independent of the target basis, and scales by conj(a)/a when the
/// source basis is scaled by a. T acts in ambient reference coordinates.
PoincarePoint dilatation_wrt_bases(const RealLinearMap& map,
                                   const FramedLine& src,
                                   const FramedLine& dst);

/// Basis-independent dilatation coefficient in the reference frame.
DilatationTensor dilatation_tensor(const RealLinearMap& map,
                                   const FramedLine& src);

} // namespace dilkit
