#pragma once

#include <limits>

#include "galmag/galilean.hpp"

namespace galmag {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  constexpr bool contains(double s) const { return lo <= s && s <= hi; }
};

/// An admissible curve gamma(s) = (s, y(s), z(s)) parametrized by Galilean
/// arc length. eval(s, k) returns the k-th derivative, k in 0..3.
///
/// Implementations must return x1 == 1 for k == 1 and x1 == 0 for k >= 2.
class C3Curve {
 public:
  virtual ~C3Curve() = default;

  virtual GVector3 eval(double s, int order) const = 0;
  virtual Interval domain() const { return {}; }
};

}  // namespace galmag
