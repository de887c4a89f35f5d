#pragma once

#include <string>

namespace ssbjt {

/// Fixed float formatting for all emitted data files: 6 significant
/// digits, '.' decimal separator, "-inf"/"inf"/"nan" spelled out.
/// Reruns must produce byte-identical output.
std::string fmt_g6(double v);

}  // namespace ssbjt
