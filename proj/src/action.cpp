#include "dilkit/action.hpp"

#include <cmath>
#include <stdexcept>

#include "dilkit/dilatation.hpp"
#include "dilkit/errors.hpp"

namespace dilkit {

namespace {

Complex mobius(Complex A, Complex B, Complex mu) {
    return (A * mu + B) / (std::conj(B) * mu + std::conj(A));
}

} // namespace

DiscAutomorphism DiscAutomorphism::from_coefficients(Complex A, Complex B) {
    double s2 = std::norm(A) - std::norm(B);
    if (s2 <= 0.0)
        throw std::invalid_argument(
            "not a disc automorphism: |A| must exceed |B|");
    double s = std::sqrt(s2);
    A /= s;
    B /= s;
    // The pair is defined up to sign; pin A to the right half-plane.
    if (A.real() < 0.0 || (A.real() == 0.0 && A.imag() < 0.0)) {
        A = -A;
        B = -B;
    }
    return {A, B};
}

DiscAutomorphism induced_automorphism(const RealLinearMap& u) {
    require_orientation_preserving(u);
    WirtingerPair w = wirtinger(u);
    return DiscAutomorphism::from_coefficients(std::conj(w.t_z), w.t_zbar);
}

PoincarePoint apply(const DiscAutomorphism& phi, const PoincarePoint& mu) {
    if (std::abs(mu.value) >= 1.0)
        throw Error(ErrorCode::out_of_disc, "point is not inside the disc");
    return {mobius(phi.A, phi.B, mu.value)};
}

double cauchy_riemann_residual(const std::function<Complex(Complex)>& f,
                               Complex mu, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("step h must be positive");
    if (std::abs(mu) + 2.0 * h >= 1.0)
        throw Error(ErrorCode::out_of_disc,
                    "difference stencil leaves the disc");
    Complex dx = (f(mu + h) - f(mu - h)) / (2.0 * h);
    Complex dy = (f(mu + Complex{0.0, h}) - f(mu - Complex{0.0, h})) /
                 (2.0 * h);
    return std::abs(dx + Complex{0.0, 1.0} * dy);
}

double cauchy_riemann_residual(const DiscAutomorphism& phi, Complex mu,
                               double h) {
    return cauchy_riemann_residual(
        [&phi](Complex z) { return mobius(phi.A, phi.B, z); }, mu, h);
}

} // namespace dilkit
