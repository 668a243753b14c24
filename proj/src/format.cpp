#include "qfs/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace qfs {

std::string format_sig12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::string(buf);
}

double round_sig12(double value) {
  const std::string s = format_sig12(value);
  return std::strtod(s.c_str(), nullptr);
}

}  // namespace qfs
