#pragma once

#include <cstdio>
#include <string>

namespace sbpdct {

/// 12 significant digits, negative zero printed as 0.
inline std::string fmt12(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace sbpdct
