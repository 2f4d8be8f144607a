#include <cstdlib>

#include "dilkit/errors.hpp"
#include "dilkit/linear_map.hpp"
#include "dilkit/tolerance.hpp"
#include "dilkit/types.hpp"

namespace dilkit {

const char* to_string(DiscModel model) {
    return model == DiscModel::klein ? "klein" : "poincare";
}

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::not_definite: return "not_definite";
    case ErrorCode::out_of_disc: return "out_of_disc";
    case ErrorCode::orientation_reversing: return "orientation_reversing";
    case ErrorCode::singular: return "singular";
    case ErrorCode::unknown_property: return "unknown_property";
    }
    return "unknown";
}

double structural_tolerance() {
    if (const char* env = std::getenv("DILATATION_KIT_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0.0)
            return v;
    }
    return 1e-12;
}

void require_orientation_preserving(const RealLinearMap& map) {
    double det = map.det();
    if (std::abs(det) <= singularity_threshold(map))
        throw Error(ErrorCode::singular, "map is numerically singular");
    if (det < 0.0)
        throw Error(ErrorCode::orientation_reversing,
                    "map reverses orientation");
}

} // namespace dilkit
