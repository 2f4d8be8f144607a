#pragma once

#include <algorithm>
#include <cmath>

#include "dilkit/types.hpp"

namespace dilkit {

/// Real linear map of the plane, stored as the 2x2 matrix acting on
/// coordinates (x, y) of z = x + iy with respect to the basis (1, i).
struct RealLinearMap {
    double m11 = 1.0, m12 = 0.0;
    double m21 = 0.0, m22 = 1.0;

    static RealLinearMap identity() { return {}; }

    /// z |-> tau * z as a real matrix.
    static RealLinearMap multiplication(Complex tau) {
        return {tau.real(), -tau.imag(), tau.imag(), tau.real()};
    }

    /// Counter-clockwise rotation by theta.
    static RealLinearMap rotation(double theta) {
        return multiplication(std::polar(1.0, theta));
    }

    static RealLinearMap diagonal(double sx, double sy) {
        return {sx, 0.0, 0.0, sy};
    }

    Complex operator()(Complex z) const {
        return {m11 * z.real() + m12 * z.imag(),
                m21 * z.real() + m22 * z.imag()};
    }

    double det() const { return m11 * m22 - m12 * m21; }

    double max_abs() const {
        return std::max({std::abs(m11), std::abs(m12), std::abs(m21),
                         std::abs(m22)});
    }
};

/// Composition a after b: (a * b)(z) = a(b(z)).
inline RealLinearMap compose(const RealLinearMap& a, const RealLinearMap& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

/// Threshold below which |det| is treated as numerically zero.
inline double singularity_threshold(const RealLinearMap& map) {
    double s = map.max_abs();
    return 1e-9 * (1.0 + s * s);
}

inline bool is_invertible(const RealLinearMap& map) {
    return std::abs(map.det()) > singularity_threshold(map);
}

inline bool is_orientation_preserving(const RealLinearMap& map) {
    return map.det() > 0.0;
}

/// Raises Error{singular} or Error{orientation_reversing} unless det is
/// positive and safely away from zero.
void require_orientation_preserving(const RealLinearMap& map);

} // namespace dilkit
