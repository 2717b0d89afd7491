#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "galmag/exec.hpp"
#include "galmag/magnetic.hpp"

namespace galmag {

/// dx/ds = f(s, x). Writes into dx, which has the same size as x.
using OdeRhs =
    std::function<void(double s, std::span<const double> x, std::span<double> dx)>;

struct IntegratorConfig {
  double step = 1e-3;
  double s_start = 0.0;
  double s_end = 1.0;
};

inline constexpr double kMaxGridPoints = 1e8;

/// Grid s_start, s_start + h, ..., s_end. The last step is shortened when the
/// interval is not a whole number of steps. Throws InvalidConfig.
std::vector<double> make_grid(double s_start, double s_end, double step);

/// n >= 2 equispaced points including both ends.
std::vector<double> linspace(double s_start, double s_end, std::size_t n);

/// Trajectory sampled on a grid; states are stored row-major, dim per row.
class SampledCurve {
 public:
  SampledCurve(std::vector<double> grid, std::size_t dim);

  std::size_t size() const { return grid_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<double>& grid() const { return grid_; }

  std::span<double> state(std::size_t i) {
    return {states_.data() + i * dim_, dim_};
  }
  std::span<const double> state(std::size_t i) const {
    return {states_.data() + i * dim_, dim_};
  }

 private:
  std::vector<double> grid_;
  std::size_t dim_;
  std::vector<double> states_;
};

/// Classic fixed-step RK4. State increments are accumulated with Kahan
/// compensation so the rounding floor stays below the O(h^4) truncation error
/// at small steps. Throws InvalidConfig, NonFiniteState.
SampledCurve integrate(const OdeRhs& rhs, std::span<const double> initial,
                       const IntegratorConfig& cfg);

// Raw ODE systems with x-coordinate eliminated.
// Magnetic layout: (y, z, y', z'). N/B-magnetic layout: (y, z, y', z', y'', z'').
OdeRhs magnetic_system(const KillingField& V);
OdeRhs n_magnetic_system(const KillingField& V, double kappa0);
OdeRhs b_magnetic_system(const KillingField& V, double kappa0);

std::vector<double> initial_state(const MagneticIC& ic);
std::vector<double> initial_state(const NMagneticIC& ic);

enum class Components { Position, FullState };

/// Max over the grid of the max-abs difference between sampled and closed-form
/// values. Position compares (y, z); FullState also compares every derivative
/// present in the sampled state. Throws DomainMismatch if the grid leaves the
/// curve's domain or the state dimension is not 4 or 6.
double max_deviation(const ClosedFormCurve& closed, const SampledCurve& sampled,
                     Components components = Components::Position,
                     Exec exec = Exec::Parallel);

/// Integrates from initial data given at s = 0 so that the result covers
/// [min(0, s_start), max(0, s_end)]. Negative parameters are reached by
/// integrating the reversed system; the returned grid is increasing.
SampledCurve integrate_from_origin(const OdeRhs& rhs,
                                   std::span<const double> initial_at_zero,
                                   double s_start, double s_end, double step);

}  // namespace galmag
