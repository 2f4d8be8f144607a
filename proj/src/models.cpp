#include "dilkit/models.hpp"

#include <cmath>

#include "dilkit/errors.hpp"

namespace dilkit {

namespace {

void require_inside_disc(Complex value) {
    if (std::abs(value) >= 1.0)
        throw Error(ErrorCode::out_of_disc, "point is not inside the disc");
}

/// 1 - |p|, taken from the cached gap when present. The direct
/// subtraction is exact for |p| >= 1/2 and harmless below.
double boundary_gap(const KleinPoint& p) {
    return p.boundary_gap ? *p.boundary_gap : 1.0 - std::abs(p.value);
}

double artanh(double r) {
    r = std::min(r, 1.0 - 1e-15);
    return 0.5 * std::log((1.0 + r) / (1.0 - r));
}

} // namespace

HemispherePoint hemisphere_lift(const KleinPoint& p) {
    require_inside_disc(p.value);
    double gap = boundary_gap(p);
    // (1 - rho)(1 + rho) written in the gap to keep small heights exact.
    return {p.value, std::sqrt(gap * (2.0 - gap))};
}

PoincarePoint stereographic(const HemispherePoint& h) {
    // Intersection of the line through (0, -1) and h with the plane w = 0.
    return {h.x / (1.0 + h.w)};
}

PoincarePoint klein_to_poincare(const KleinPoint& p) {
    require_inside_disc(p.value);
    double rho = std::abs(p.value);
    if (rho == 0.0)
        return {Complex{0.0, 0.0}};
    Complex direction = p.value / rho;
    double gap = boundary_gap(p);
    double gamma = std::sqrt(gap / (2.0 - gap));
    // (1 - gamma) / (1 + gamma) = 2(1 - gap) / ((2 - gap)(1 + gamma)^2):
    // free of cancellation at both ends of the radius range.
    double modulus = 2.0 * (1.0 - gap) /
                     ((2.0 - gap) * (1.0 + gamma) * (1.0 + gamma));
    return {modulus * direction};
}

KleinPoint poincare_to_klein(const PoincarePoint& mu) {
    require_inside_disc(mu.value);
    double denom = 1.0 + std::norm(mu.value);
    double gap_mu = 1.0 - std::abs(mu.value);
    // 1 - |2 mu / (1 + |mu|^2)| = (1 - |mu|)^2 / (1 + |mu|^2) exactly.
    return {2.0 * mu.value / denom, gap_mu * gap_mu / denom};
}

double poincare_distance(const PoincarePoint& mu1, const PoincarePoint& mu2) {
    require_inside_disc(mu1.value);
    require_inside_disc(mu2.value);
    double r = std::abs((mu1.value - mu2.value) /
                        (1.0 - std::conj(mu2.value) * mu1.value));
    return 2.0 * artanh(r);
}

bool near_boundary(Complex value) {
    return std::abs(value) >= 1.0 - 1e-12;
}

} // namespace dilkit
