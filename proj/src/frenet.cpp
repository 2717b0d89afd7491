#include "galmag/frenet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "galmag/error.hpp"

namespace galmag {

namespace {

[[noreturn]] void throw_zero_curvature(double s) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "curvature vanishes at s=" << s;
  throw Error(ErrorKind::ZeroCurvature, msg.str());
}

double isotropic_norm(const GVector3& v) { return std::hypot(v.x2, v.x3); }

}  // namespace

double FrenetResidual::max() const { return std::max({r1, r2, r3}); }

double curvature(const C3Curve& c, double s) {
  const GVector3 acc = c.eval(s, 2);
  return std::hypot(acc.x2, acc.x3);
}

double torsion(const C3Curve& c, double s) {
  const GVector3 acc = c.eval(s, 2);
  const double kappa_sq = acc.x2 * acc.x2 + acc.x3 * acc.x3;
  if (kappa_sq == 0.0) throw_zero_curvature(s);
  const GVector3 jerk = c.eval(s, 3);
  // gamma'' and gamma''' are isotropic, so det(gamma', gamma'', gamma''')
  // reduces to the 2x2 minor against the unit first component of gamma'.
  return (acc.x2 * jerk.x3 - acc.x3 * jerk.x2) / kappa_sq;
}

FrenetFrame frenet_frame(const C3Curve& c, double s) {
  const GVector3 vel = c.eval(s, 1);
  const GVector3 acc = c.eval(s, 2);
  const double kappa = std::hypot(acc.x2, acc.x3);
  if (kappa == 0.0) throw_zero_curvature(s);
  const GVector3 jerk = c.eval(s, 3);

  FrenetFrame f;
  f.T = {1.0, vel.x2, vel.x3};
  f.N = {0.0, acc.x2 / kappa, acc.x3 / kappa};
  f.B = {0.0, -acc.x3 / kappa, acc.x2 / kappa};
  f.kappa = kappa;
  f.tau = (acc.x2 * jerk.x3 - acc.x3 * jerk.x2) / (kappa * kappa);
  return f;
}

FrenetResidual frenet_residual(const C3Curve& c, double s, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorKind::InvalidStep, "finite-difference step must be > 0");
  }
  const FrenetFrame lo = frenet_frame(c, s - h);
  const FrenetFrame mid = frenet_frame(c, s);
  const FrenetFrame hi = frenet_frame(c, s + h);

  const double inv = 1.0 / (2.0 * h);
  const GVector3 dT = (hi.T - lo.T) * inv;
  const GVector3 dN = (hi.N - lo.N) * inv;
  const GVector3 dB = (hi.B - lo.B) * inv;

  return {isotropic_norm(dT - mid.kappa * mid.N),
          isotropic_norm(dN - mid.tau * mid.B),
          isotropic_norm(dB + mid.tau * mid.N)};
}

}  // namespace galmag
