#pragma once

#include <json.hpp>

#include "dilkit/action.hpp"
#include "dilkit/dilatation.hpp"
#include "dilkit/forms.hpp"
#include "dilkit/framed.hpp"
#include "dilkit/linear_map.hpp"
#include "dilkit/points.hpp"
#include "dilkit/types.hpp"
#include "dilkit/verify.hpp"

namespace dilkit {

using Json = nlohmann::json;

// Shared wire encodings. Complex numbers are {"re", "im"}; forms are
// {"a", "b", "c"}; matrices are {"m": [m11, m12, m21, m22]} row-major;
// disc points carry a "model" tag.

Json to_json(Complex z);
Json to_json(const QuadraticForm& q);
Json to_json(const RealLinearMap& map);
Json to_json(const KleinPoint& p);
Json to_json(const PoincarePoint& mu);
Json to_json(const HemispherePoint& h);
Json to_json(const DiscAutomorphism& phi);
Json to_json(const FramedLine& line);
Json to_json(const DilatationTensor& tensor);
Json to_json(const VerificationReport& report);

Complex complex_from_json(const Json& j);
QuadraticForm form_from_json(const Json& j);
RealLinearMap matrix_from_json(const Json& j);

/// Decodes a model-tagged point; returns the raw value and the tag.
std::pair<Complex, DiscModel> disc_point_from_json(const Json& j);

} // namespace dilkit
