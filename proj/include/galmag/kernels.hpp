#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <span>
#include <vector>

#include "galmag/curve.hpp"
#include "galmag/exec.hpp"
#include "galmag/frenet.hpp"
#include "galmag/magnetic.hpp"

// Grid kernels used by verification and export. Every kernel has a plain
// serial loop (kernels::serial) and an OpenMP loop (kernels::omp) computing
// the same thing; the Exec overloads dispatch between them. Max/min
// reductions are order independent, so both paths agree bit for bit.
namespace galmag {

struct ValueRange {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();

  double spread() const { return max - min; }
  void add(double v) {
    min = std::min(min, v);
    max = std::max(max, v);
  }
};

/// One exported sample (s, x, y, z); x == s for admissible curves.
using PositionSample = std::array<double, 4>;

struct FrameSample {
  double s = 0.0;
  FrenetFrame frame;
};

namespace kernels {

namespace serial {
std::vector<PositionSample> sample_positions(const C3Curve& c,
                                             std::span<const double> grid);
ValueRange curvature_range(const C3Curve& c, std::span<const double> grid);
ValueRange torsion_range(const C3Curve& c, std::span<const double> grid);
double max_lorentz_residual(const ClosedFormCurve& c,
                            std::span<const double> grid);
double max_n_magnetic_residual(const ClosedFormCurve& c,
                               std::span<const double> grid);
ValueRange helix_distance_range(const C3Curve& c, const HelixData& h,
                                std::span<const double> grid);
std::vector<FrameSample> frame_table(const C3Curve& c,
                                     std::span<const double> grid);
}  // namespace serial

namespace omp {
std::vector<PositionSample> sample_positions(const C3Curve& c,
                                             std::span<const double> grid);
ValueRange curvature_range(const C3Curve& c, std::span<const double> grid);
ValueRange torsion_range(const C3Curve& c, std::span<const double> grid);
double max_lorentz_residual(const ClosedFormCurve& c,
                            std::span<const double> grid);
double max_n_magnetic_residual(const ClosedFormCurve& c,
                               std::span<const double> grid);
ValueRange helix_distance_range(const C3Curve& c, const HelixData& h,
                                std::span<const double> grid);
std::vector<FrameSample> frame_table(const C3Curve& c,
                                     std::span<const double> grid);
}  // namespace omp

}  // namespace kernels

std::vector<PositionSample> sample_positions(const C3Curve& c,
                                             std::span<const double> grid,
                                             Exec exec = Exec::Parallel);

ValueRange curvature_range(const C3Curve& c, std::span<const double> grid,
                           Exec exec = Exec::Parallel);

/// Throws ZeroCurvature at the first grid point where kappa == 0.
ValueRange torsion_range(const C3Curve& c, std::span<const double> grid,
                         Exec exec = Exec::Parallel);

/// max ||gamma'' - V x_G gamma'||_G. Throws WrongCase for N-magnetic curves.
double max_lorentz_residual(const ClosedFormCurve& c,
                            std::span<const double> grid,
                            Exec exec = Exec::Parallel);

/// max ||(0, y''', z''')/kappa0 - V x_G N||_G. Throws WrongCase for magnetic
/// curves.
double max_n_magnetic_residual(const ClosedFormCurve& c,
                               std::span<const double> grid,
                               Exec exec = Exec::Parallel);

/// Range of ||gamma(s) - l(s)||_G; also checks that the difference is
/// isotropic (throws DomainMismatch otherwise).
ValueRange helix_distance_range(const C3Curve& c, const HelixData& h,
                                std::span<const double> grid,
                                Exec exec = Exec::Parallel);

/// Throws ZeroCurvature carrying the first offending s.
std::vector<FrameSample> frame_table(const C3Curve& c,
                                     std::span<const double> grid,
                                     Exec exec = Exec::Parallel);

}  // namespace galmag
