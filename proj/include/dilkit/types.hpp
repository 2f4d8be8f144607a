#pragma once

#include <complex>

namespace dilkit {

using Complex = std::complex<double>;

/// Which hyperbolic-disc coordinate a point is expressed in.
enum class DiscModel { klein, poincare };

const char* to_string(DiscModel model);

} // namespace dilkit
