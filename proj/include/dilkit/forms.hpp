#pragma once

#include "dilkit/linear_map.hpp"
#include "dilkit/points.hpp"
#include "dilkit/tolerance.hpp"
#include "dilkit/types.hpp"

namespace dilkit {

/// Real quadratic form a*X^2 + b*XY + c*Y^2 on the plane, where
/// X(z) = Re z and Y(z) = Im z.
struct QuadraticForm {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double max_abs() const {
        return std::max({std::abs(a), std::abs(b), std::abs(c)});
    }
};

/// Coordinates diagonalizing the determinant: D = t^2 - r^2 - s^2.
struct TrsCoordinates {
    double t = 0.0;
    double r = 0.0;
    double s = 0.0;
};

enum class Definiteness { positive, negative, not_definite };

/// Result of diagonalize(): q equals the pullback of the axis-aligned
/// form a*X^2 + c*Y^2 under multiplication by e^{i*theta}.
struct DiagonalForm {
    double a = 0.0;
    double c = 0.0;
    double theta = 0.0;
};

// Basis forms: |z|^2, Re z^2, Im z^2.
inline QuadraticForm norm_form() { return {1.0, 0.0, 1.0}; }
inline QuadraticForm real_part_form() { return {1.0, 0.0, -1.0}; }
inline QuadraticForm imag_part_form() { return {0.0, 2.0, 0.0}; }

/// Axis-aligned form a*X^2 + c*Y^2.
inline QuadraticForm axis_form(double a, double c) { return {a, 0.0, c}; }

double evaluate(const QuadraticForm& q, Complex z);

/// Symmetric bilinear form recovered from q by polarization.
double polarize(const QuadraticForm& q, Complex v, Complex w);

/// ac - b^2/4; positive exactly on definite forms.
double determinant(const QuadraticForm& q);

Definiteness definiteness(const QuadraticForm& q,
                          double tol = structural_tolerance());

TrsCoordinates trs_coordinates(const QuadraticForm& q);
QuadraticForm from_trs(double t, double r, double s);
QuadraticForm from_trs(const TrsCoordinates& trs);

/// Pullback L*q = q o L, expanded back into coefficients exactly.
QuadraticForm pullback(const RealLinearMap& map, const QuadraticForm& q);

/// Pullback under z |-> tau*z, computed on the (t, r+is) split:
/// t scales by |tau|^2 and r+is multiplies by conj(tau)^2.
QuadraticForm mult_pullback(Complex tau, const QuadraticForm& q);

/// Writes q as the rotation pullback of an axis-aligned form with
/// |a| >= |c| and theta in (-pi/2, pi/2]. Isotropic forms get theta = 0.
DiagonalForm diagonalize(const QuadraticForm& q,
                         double tol = structural_tolerance());

QuadraticForm reconstruct(const DiagonalForm& d);

/// Conformal class of a definite form as a Klein-disc point (r+is)/t.
/// Raises Error{not_definite} when the determinant test fails.
KleinPoint klein_point(const QuadraticForm& q,
                       double tol = structural_tolerance());

} // namespace dilkit
