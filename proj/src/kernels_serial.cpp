#include <algorithm>

#include "galmag/error.hpp"
#include "galmag/kernels.hpp"
#include "kernel_points.hpp"

namespace galmag::kernels::serial {

std::vector<PositionSample> sample_positions(const C3Curve& c,
                                             std::span<const double> grid) {
  std::vector<PositionSample> out;
  out.reserve(grid.size());
  for (double s : grid) out.push_back(detail::position_at(c, s));
  return out;
}

ValueRange curvature_range(const C3Curve& c, std::span<const double> grid) {
  ValueRange r;
  for (double s : grid) r.add(curvature(c, s));
  return r;
}

ValueRange torsion_range(const C3Curve& c, std::span<const double> grid) {
  ValueRange r;
  for (double s : grid) r.add(torsion(c, s));
  return r;
}

double max_lorentz_residual(const ClosedFormCurve& c,
                            std::span<const double> grid) {
  double m = 0.0;
  for (double s : grid) m = std::max(m, detail::lorentz_residual_at(c, s));
  return m;
}

double max_n_magnetic_residual(const ClosedFormCurve& c,
                               std::span<const double> grid) {
  const double k0 = *c.kappa0();
  double m = 0.0;
  for (double s : grid) m = std::max(m, detail::n_magnetic_residual_at(c, k0, s));
  return m;
}

ValueRange helix_distance_range(const C3Curve& c, const HelixData& h,
                                std::span<const double> grid) {
  ValueRange r;
  for (double s : grid) {
    const double d = detail::helix_distance_at(c, h, s);
    if (std::isnan(d)) {
      throw Error(ErrorKind::DomainMismatch,
                  "curve minus axis is not isotropic");
    }
    r.add(d);
  }
  return r;
}

std::vector<FrameSample> frame_table(const C3Curve& c,
                                     std::span<const double> grid) {
  std::vector<FrameSample> out;
  out.reserve(grid.size());
  for (double s : grid) out.push_back({s, frenet_frame(c, s)});
  return out;
}

}  // namespace galmag::kernels::serial
