#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "dilkit/forms.hpp"
#include "dilkit/linear_map.hpp"
#include "dilkit/types.hpp"

namespace dilkit {

/// splitmix64 (Vigna's finalizer constants). Fixed here so that ports in
/// other languages can reproduce the verification trial streams.
class Splitmix64 {
  public:
    explicit Splitmix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 significant bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

  private:
    std::uint64_t state_;
};

/// Generator for one verification trial. Trials are independent streams:
/// trial i of a run with seed s starts from state s XOR (GOLDEN * (i+1)),
/// so parallel and serial execution draw identical values.
inline Splitmix64 trial_stream(std::uint64_t seed, std::uint64_t index) {
    return Splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

/// Matrix entries i.i.d. uniform on [-10, 10], resampled as a block until
/// det exceeds the floor (default 1e-6: invertible, orientation-preserving).
inline RealLinearMap random_matrix(Splitmix64& rng, double det_floor = 1e-6) {
    while (true) {
        RealLinearMap m{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0),
                        rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        if (m.det() > det_floor)
            return m;
    }
}

/// Uniform point of the disc of the given radius: angle first, then
/// radius = cap * sqrt(u). Default cap keeps 1e-6 clear of the boundary.
inline Complex random_disc_point(Splitmix64& rng, double cap = 1.0 - 1e-6) {
    double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    double radius = cap * std::sqrt(rng.next_double());
    return std::polar(radius, angle);
}

/// Nonzero complex scalar: modulus in [lo, hi], uniform angle.
inline Complex random_scale(Splitmix64& rng, double lo = 0.1,
                            double hi = 10.0) {
    double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return std::polar(rng.uniform(lo, hi), angle);
}

/// Coefficients i.i.d. uniform on [-10, 10].
inline QuadraticForm random_form(Splitmix64& rng) {
    return {rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0),
            rng.uniform(-10.0, 10.0)};
}

/// Definite form with a healthy margin: resampled until the determinant
/// is at least 1e-4 of t^2, which keeps its Klein point at modulus
/// <= sqrt(1 - 1e-4). Either sign of t occurs.
inline QuadraticForm random_definite_form(Splitmix64& rng) {
    while (true) {
        QuadraticForm q = random_form(rng);
        double t = (q.a + q.c) / 2;
        if (determinant(q) >= 1e-4 * t * t && std::abs(t) >= 1e-2)
            return q;
    }
}

} // namespace dilkit
