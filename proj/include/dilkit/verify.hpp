#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dilkit/prng.hpp"

namespace dilkit {

/// Outcome of one seeded verification run. Except for elapsed_ms the
/// report is a deterministic function of (property, trials, seed, tol).
struct VerificationReport {
    std::string property;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double max_error = 0.0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    double elapsed_ms = 0.0;
};

enum class RunMode { serial, parallel };

/// A registered property: one randomized check per trial, returning a
/// nonnegative error that must stay at or below the tolerance.
struct Property {
    std::string name;
    double default_tolerance;
    double (*trial)(Splitmix64& rng);
};

const std::vector<Property>& property_registry();

bool is_registered_property(std::string_view name);

/// Runs `trials` checks of the named property, each on its own stream
/// derived from (seed, index). Serial and parallel modes produce the
/// same report. tol <= 0 selects the property's default tolerance.
/// Raises Error{unknown_property} for unregistered names.
VerificationReport run_property(std::string_view name, std::uint64_t trials,
                                std::uint64_t seed, double tol,
                                RunMode mode = RunMode::parallel);

} // namespace dilkit
