#include <algorithm>
#include <cstddef>
#include <limits>

#include "galmag/error.hpp"
#include "galmag/kernels.hpp"
#include "kernel_points.hpp"

// Exceptions cannot leave an OpenMP region. Loops that may fail record the
// lowest failing index and rethrow from the serial point function afterwards,
// so the error names the same s as the serial path would.

namespace galmag::kernels::omp {

namespace {

constexpr std::ptrdiff_t kNone = std::numeric_limits<std::ptrdiff_t>::max();

std::ptrdiff_t first_zero_curvature(const C3Curve& c,
                                    std::span<const double> grid) {
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  std::ptrdiff_t bad = kNone;
#pragma omp parallel for reduction(min : bad) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (detail::has_zero_curvature(c, grid[static_cast<std::size_t>(i)])) {
      bad = std::min(bad, i);
    }
  }
  return bad;
}

}  // namespace

std::vector<PositionSample> sample_positions(const C3Curve& c,
                                             std::span<const double> grid) {
  std::vector<PositionSample> out(grid.size());
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = detail::position_at(c, grid[k]);
  }
  return out;
}

ValueRange curvature_range(const C3Curve& c, std::span<const double> grid) {
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  ValueRange r;
  double lo = r.min;
  double hi = r.max;
#pragma omp parallel for reduction(min : lo) reduction(max : hi) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double k = curvature(c, grid[static_cast<std::size_t>(i)]);
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  r.min = lo;
  r.max = hi;
  return r;
}

ValueRange torsion_range(const C3Curve& c, std::span<const double> grid) {
  if (const auto bad = first_zero_curvature(c, grid); bad != kNone) {
    torsion(c, grid[static_cast<std::size_t>(bad)]);  // throws
  }
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  ValueRange r;
  double lo = r.min;
  double hi = r.max;
#pragma omp parallel for reduction(min : lo) reduction(max : hi) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double t = torsion(c, grid[static_cast<std::size_t>(i)]);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  r.min = lo;
  r.max = hi;
  return r;
}

double max_lorentz_residual(const ClosedFormCurve& c,
                            std::span<const double> grid) {
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  double m = 0.0;
#pragma omp parallel for reduction(max : m) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    m = std::max(m, detail::lorentz_residual_at(c, grid[static_cast<std::size_t>(i)]));
  }
  return m;
}

double max_n_magnetic_residual(const ClosedFormCurve& c,
                               std::span<const double> grid) {
  const double k0 = *c.kappa0();
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  double m = 0.0;
#pragma omp parallel for reduction(max : m) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    m = std::max(m, detail::n_magnetic_residual_at(c, k0, grid[static_cast<std::size_t>(i)]));
  }
  return m;
}

ValueRange helix_distance_range(const C3Curve& c, const HelixData& h,
                                std::span<const double> grid) {
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  std::ptrdiff_t bad = kNone;
#pragma omp parallel for reduction(min : lo, bad) reduction(max : hi) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double d = detail::helix_distance_at(c, h, grid[static_cast<std::size_t>(i)]);
    if (std::isnan(d)) {
      bad = std::min(bad, i);
    } else {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  if (bad != kNone) {
    throw Error(ErrorKind::DomainMismatch, "curve minus axis is not isotropic");
  }
  ValueRange r;
  r.min = lo;
  r.max = hi;
  return r;
}

std::vector<FrameSample> frame_table(const C3Curve& c,
                                     std::span<const double> grid) {
  if (const auto bad = first_zero_curvature(c, grid); bad != kNone) {
    frenet_frame(c, grid[static_cast<std::size_t>(bad)]);  // throws
  }
  std::vector<FrameSample> out(grid.size());
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = {grid[k], frenet_frame(c, grid[k])};
  }
  return out;
}

}  // namespace galmag::kernels::omp
