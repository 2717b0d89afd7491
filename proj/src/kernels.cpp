#include "galmag/kernels.hpp"

#include <string>

#include "galmag/error.hpp"

namespace galmag {

namespace {

void require_magnetic(const ClosedFormCurve& c) {
  if (is_n_magnetic_case(c.kind())) {
    throw Error(ErrorKind::WrongCase,
                "Lorentz residual needs a magnetic curve, got " +
                    std::string(to_string(c.kind())));
  }
}

void require_n_magnetic(const ClosedFormCurve& c) {
  if (!is_n_magnetic_case(c.kind())) {
    throw Error(ErrorKind::WrongCase,
                "N-magnetic residual needs an N-magnetic curve, got " +
                    std::string(to_string(c.kind())));
  }
}

}  // namespace

std::vector<PositionSample> sample_positions(const C3Curve& c,
                                             std::span<const double> grid,
                                             Exec exec) {
  return exec == Exec::Serial ? kernels::serial::sample_positions(c, grid)
                              : kernels::omp::sample_positions(c, grid);
}

ValueRange curvature_range(const C3Curve& c, std::span<const double> grid,
                           Exec exec) {
  return exec == Exec::Serial ? kernels::serial::curvature_range(c, grid)
                              : kernels::omp::curvature_range(c, grid);
}

ValueRange torsion_range(const C3Curve& c, std::span<const double> grid,
                         Exec exec) {
  return exec == Exec::Serial ? kernels::serial::torsion_range(c, grid)
                              : kernels::omp::torsion_range(c, grid);
}

double max_lorentz_residual(const ClosedFormCurve& c,
                            std::span<const double> grid, Exec exec) {
  require_magnetic(c);
  return exec == Exec::Serial ? kernels::serial::max_lorentz_residual(c, grid)
                              : kernels::omp::max_lorentz_residual(c, grid);
}

double max_n_magnetic_residual(const ClosedFormCurve& c,
                               std::span<const double> grid, Exec exec) {
  require_n_magnetic(c);
  return exec == Exec::Serial ? kernels::serial::max_n_magnetic_residual(c, grid)
                              : kernels::omp::max_n_magnetic_residual(c, grid);
}

ValueRange helix_distance_range(const C3Curve& c, const HelixData& h,
                                std::span<const double> grid, Exec exec) {
  return exec == Exec::Serial ? kernels::serial::helix_distance_range(c, h, grid)
                              : kernels::omp::helix_distance_range(c, h, grid);
}

std::vector<FrameSample> frame_table(const C3Curve& c,
                                     std::span<const double> grid, Exec exec) {
  return exec == Exec::Serial ? kernels::serial::frame_table(c, grid)
                              : kernels::omp::frame_table(c, grid);
}

}  // namespace galmag
