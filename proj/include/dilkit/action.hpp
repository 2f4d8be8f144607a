#pragma once

#include <functional>

#include "dilkit/linear_map.hpp"
#include "dilkit/points.hpp"

namespace dilkit {

/// Orientation-preserving Mobius automorphism of the unit disc,
/// mu |-> (A*mu + B) / (conj(B)*mu + conj(A)) with |A| > |B|.
/// Stored normalized: |A|^2 - |B|^2 = 1 and Re A > 0 (Im A > 0 on ties).
struct DiscAutomorphism {
    Complex A{1.0, 0.0};
    Complex B{0.0, 0.0};

    static DiscAutomorphism identity() { return {}; }

    /// Normalizes raw coefficients; requires |A| > |B|.
    static DiscAutomorphism from_coefficients(Complex A, Complex B);
};

/// The automorphism phi with mu_{T o u} = phi(mu_T) for all
/// orientation-preserving T. Coefficients are (conj(u_z), u_zbar).
DiscAutomorphism induced_automorphism(const RealLinearMap& u);

/// Evaluates the automorphism; raises Error{out_of_disc} if |mu| >= 1.
PoincarePoint apply(const DiscAutomorphism& phi, const PoincarePoint& mu);

/// Magnitude of the central-difference conj-Wirtinger derivative
/// |d/dx f + i d/dy f| at mu with step h; near zero for analytic f.
/// Requires |mu| + 2h < 1 so the stencil stays inside the disc.
double cauchy_riemann_residual(const std::function<Complex(Complex)>& f,
                               Complex mu, double h = 1e-5);

double cauchy_riemann_residual(const DiscAutomorphism& phi, Complex mu,
                               double h = 1e-5);

} // namespace dilkit
