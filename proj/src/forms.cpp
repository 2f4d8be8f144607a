#include "dilkit/forms.hpp"

#include <cmath>

#include "dilkit/angles.hpp"
#include "dilkit/errors.hpp"

namespace dilkit {

double evaluate(const QuadraticForm& q, Complex z) {
    double x = z.real();
    double y = z.imag();
    return q.a * x * x + q.b * x * y + q.c * y * y;
}

double polarize(const QuadraticForm& q, Complex v, Complex w) {
    return (evaluate(q, v + w) - evaluate(q, v) - evaluate(q, w)) / 2.0;
}

double determinant(const QuadraticForm& q) {
    return q.a * q.c - q.b * q.b / 4.0;
}

Definiteness definiteness(const QuadraticForm& q, double tol) {
    if (determinant(q) <= tol * std::max(1.0, q.max_abs()))
        return Definiteness::not_definite;
    return q.a > 0.0 ? Definiteness::positive : Definiteness::negative;
}

TrsCoordinates trs_coordinates(const QuadraticForm& q) {
    return {(q.a + q.c) / 2.0, (q.a - q.c) / 2.0, q.b / 2.0};
}

QuadraticForm from_trs(double t, double r, double s) {
    return {t + r, 2.0 * s, t - r};
}

QuadraticForm from_trs(const TrsCoordinates& trs) {
    return from_trs(trs.t, trs.r, trs.s);
}

QuadraticForm pullback(const RealLinearMap& map, const QuadraticForm& q) {
    const auto [a, b, c] = q;
    const double m11 = map.m11, m12 = map.m12, m21 = map.m21, m22 = map.m22;
    return {a * m11 * m11 + b * m11 * m21 + c * m21 * m21,
            2.0 * a * m11 * m12 + b * (m11 * m22 + m12 * m21) +
                2.0 * c * m21 * m22,
            a * m12 * m12 + b * m12 * m22 + c * m22 * m22};
}

QuadraticForm mult_pullback(Complex tau, const QuadraticForm& q) {
    TrsCoordinates trs = trs_coordinates(q);
    Complex z{trs.r, trs.s};
    Complex zz = std::conj(tau) * std::conj(tau) * z;
    return from_trs(std::norm(tau) * trs.t, zz.real(), zz.imag());
}

DiagonalForm diagonalize(const QuadraticForm& q, double tol) {
    // Symmetric matrix of the form: [[a, b/2], [b/2, c]].
    const double a = q.a, h = q.b / 2.0, c = q.c;
    const double mean = (a + c) / 2.0;
    const double gap = std::hypot(a - c, q.b); // eigenvalue spread

    if (gap <= tol * std::max(1.0, q.max_abs()))
        return {mean, mean, 0.0}; // isotropic: direction is arbitrary

    // Leading eigenvalue by absolute value; the other one through the
    // determinant to dodge cancellation.
    const double lead =
        mean >= 0.0 ? mean + gap / 2.0 : mean - gap / 2.0;
    const double other = (a * c - h * h) / lead;

    // Eigenvector for `lead` from the better-conditioned row.
    double vx, vy;
    if (std::abs(a - lead) > std::abs(c - lead)) {
        vx = h;
        vy = lead - a;
    } else {
        vx = lead - c;
        vy = h;
    }
    double theta = -std::atan2(vy, vx);
    return {lead, other, wrap_direction(theta)};
}

QuadraticForm reconstruct(const DiagonalForm& d) {
    return mult_pullback(std::polar(1.0, d.theta),
                         from_trs((d.a + d.c) / 2.0, (d.a - d.c) / 2.0, 0.0));
}

KleinPoint klein_point(const QuadraticForm& q, double tol) {
    if (definiteness(q, tol) == Definiteness::not_definite)
        throw Error(ErrorCode::not_definite,
                    "form has no conformal class: determinant not positive");
    TrsCoordinates trs = trs_coordinates(q);
    return {Complex{trs.r / trs.t, trs.s / trs.t}};
}

} // namespace dilkit
