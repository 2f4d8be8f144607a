#pragma once

namespace dilkit {

/// Default absolute tolerance used to decide structural questions
/// (definiteness of a form, isotropy ties). Reads DILATATION_KIT_TOL
/// from the environment on every call; falls back to 1e-12.
double structural_tolerance();

} // namespace dilkit
