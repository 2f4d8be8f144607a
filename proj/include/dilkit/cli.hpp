#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "dilkit/json_io.hpp"
#include "dilkit/verify.hpp"

namespace dilkit::cli {

/// Exit code plus the single JSON document the command prints on stdout.
/// Domain errors map to code 2 and {"error": <code>}; an unknown verify
/// property maps to code 3; a failed verification run maps to code 1.
struct CommandResult {
    int exit_code = 0;
    Json output;
};

CommandResult cmd_mu(const RealLinearMap& map);

CommandResult cmd_convert(Complex point, DiscModel from, DiscModel to);

/// Generic pullback when a matrix is given; the multiplication-map fast
/// path when tau is given.
CommandResult cmd_pullback(const RealLinearMap& map, const QuadraticForm& q);
CommandResult cmd_pullback(Complex tau, const QuadraticForm& q);

CommandResult cmd_diagonalize(const QuadraticForm& q);

CommandResult cmd_automorphism(const RealLinearMap& map);

CommandResult cmd_tensor(const RealLinearMap& map, Complex basis);

CommandResult cmd_verify(std::string_view property, std::uint64_t trials,
                         std::uint64_t seed, std::optional<double> tol,
                         RunMode mode = RunMode::parallel);

} // namespace dilkit::cli
