#ifndef DELVER_FORMAT_HPP
#define DELVER_FORMAT_HPP

#include <cstdio>
#include <string>

namespace delver {

// All floating-point values written to CSV go through this: 12 significant
// digits, fixed formatting, so identical runs produce byte-identical files.
inline std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::string(buf);
}

}  // namespace delver

#endif
