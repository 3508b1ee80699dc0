#ifndef MAJORLAB_TOLERANCE_HPP
#define MAJORLAB_TOLERANCE_HPP

#include <algorithm>
#include <cmath>

namespace majorlab {

// Shared comparison policy: absolute floor 1e-12, relative 1e-9.
// Every tolerance-based comparison in the library routes through one of
// these helpers so the policy lives in exactly one place.
struct Tolerance {
  double abs_floor = 1e-12;
  double rel = 1e-9;

  double gap(double scale) const {
    return std::max(abs_floor, rel * std::abs(scale));
  }
  bool close(double a, double b) const {
    return std::abs(a - b) <= gap(std::max(std::abs(a), std::abs(b)));
  }
  bool leq(double a, double b) const {  // a <= b up to the gap
    return a <= b + gap(std::max(std::abs(a), std::abs(b)));
  }
};

inline const Tolerance& default_tolerance() {
  static const Tolerance tol{};
  return tol;
}

}  // namespace majorlab

#endif
