#include "ssbjt/csv.hpp"

#include <cmath>
#include <cstdio>

namespace ssbjt {

std::string fmt_g6(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace ssbjt
