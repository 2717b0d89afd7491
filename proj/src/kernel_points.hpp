#pragma once

// Per-point bodies shared by the serial and OpenMP kernel loops.

#include <cmath>

#include "galmag/kernels.hpp"

namespace galmag::detail {

inline PositionSample position_at(const C3Curve& c, double s) {
  const GVector3 p = c.eval(s, 0);
  return {s, p.x1, p.x2, p.x3};
}

inline double lorentz_residual_at(const ClosedFormCurve& c, double s) {
  const GVector3 acc = c.eval(s, 2);
  const GVector3 vel = c.eval(s, 1);
  return norm(acc - lorentz_force(c.field(), vel));
}

inline double n_magnetic_residual_at(const ClosedFormCurve& c, double kappa0,
                                     double s) {
  const GVector3 acc = c.eval(s, 2);
  const GVector3 jerk = c.eval(s, 3);
  const GVector3 normal = acc / kappa0;
  return norm(jerk / kappa0 - lorentz_force(c.field(), normal));
}

/// NaN when gamma(s) - l(s) is not isotropic.
inline double helix_distance_at(const C3Curve& c, const HelixData& h, double s) {
  const GVector3 d = c.eval(s, 0) - h.axis.at(s);
  if (!is_isotropic(d)) return std::nan("");
  return norm(d);
}

inline bool has_zero_curvature(const C3Curve& c, double s) {
  const GVector3 acc = c.eval(s, 2);
  return acc.x2 == 0.0 && acc.x3 == 0.0;
}

}  // namespace galmag::detail
