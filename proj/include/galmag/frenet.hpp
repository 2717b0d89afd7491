#pragma once

#include "galmag/curve.hpp"
#include "galmag/galilean.hpp"

namespace galmag {

inline constexpr double kDefaultFdStep = 1e-5;

struct FrenetFrame {
  GVector3 T;
  GVector3 N;
  GVector3 B;
  double kappa = 0.0;
  double tau = 0.0;
};

/// Isotropic-norm residuals of the Frenet equations
/// T' - kappa N, N' - tau B, B' + tau N.
struct FrenetResidual {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;

  double max() const;
};

/// sqrt(y''^2 + z''^2) from the curve's analytic second derivative.
double curvature(const C3Curve& c, double s);

/// det(gamma', gamma'', gamma''') / kappa^2. Throws ZeroCurvature if kappa == 0.
double torsion(const C3Curve& c, double s);

/// Throws ZeroCurvature if kappa == 0.
FrenetFrame frenet_frame(const C3Curve& c, double s);

/// Frame derivatives come from central differences with step h, the frame
/// values themselves from frenet_frame. Throws InvalidStep for h <= 0 or
/// non-finite h, ZeroCurvature if kappa vanishes at s - h, s or s + h.
FrenetResidual frenet_residual(const C3Curve& c, double s,
                               double h = kDefaultFdStep);

}  // namespace galmag
