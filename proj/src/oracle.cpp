#include "galmag/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "galmag/error.hpp"

namespace galmag {

namespace {

void validate_interval(double s_start, double s_end) {
  if (!std::isfinite(s_start) || !std::isfinite(s_end) || !(s_end > s_start)) {
    throw Error(ErrorKind::InvalidConfig, "interval requires s_end > s_start");
  }
}

}  // namespace

std::vector<double> make_grid(double s_start, double s_end, double step) {
  validate_interval(s_start, s_end);
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorKind::InvalidConfig, "step must be > 0");
  }
  const double steps = (s_end - s_start) / step;
  if (steps > kMaxGridPoints) {
    throw Error(ErrorKind::InvalidConfig, "grid would exceed 1e8 steps");
  }
  // Snap to a whole number of steps when the ratio is integral up to rounding,
  // otherwise add one shortened final step.
  auto n = static_cast<std::size_t>(std::llround(steps));
  if (std::abs(steps - static_cast<double>(n)) > 1e-9 * std::max(1.0, steps)) {
    n = static_cast<std::size_t>(std::ceil(steps));
  }
  n = std::max<std::size_t>(n, 1);

  std::vector<double> grid(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = s_start + static_cast<double>(i) * step;
  }
  grid[n] = s_end;
  return grid;
}

std::vector<double> linspace(double s_start, double s_end, std::size_t n) {
  validate_interval(s_start, s_end);
  if (n < 2) throw Error(ErrorKind::InvalidConfig, "need at least 2 samples");
  std::vector<double> grid(n);
  const double h = (s_end - s_start) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    grid[i] = s_start + static_cast<double>(i) * h;
  }
  grid[n - 1] = s_end;
  return grid;
}

SampledCurve::SampledCurve(std::vector<double> grid, std::size_t dim)
    : grid_(std::move(grid)), dim_(dim), states_(grid_.size() * dim, 0.0) {}

SampledCurve integrate(const OdeRhs& rhs, std::span<const double> initial,
                       const IntegratorConfig& cfg) {
  if (!rhs) throw Error(ErrorKind::InvalidConfig, "empty right-hand side");
  if (initial.empty()) throw Error(ErrorKind::InvalidConfig, "empty state");

  const std::size_t dim = initial.size();
  SampledCurve out(make_grid(cfg.s_start, cfg.s_end, cfg.step), dim);
  const auto& grid = out.grid();

  std::vector<double> x(initial.begin(), initial.end());
  std::vector<double> comp(dim, 0.0);
  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

  auto check_finite = [&](std::span<const double> v, double s) {
    if (!std::all_of(v.begin(), v.end(), [](double a) { return std::isfinite(a); })) {
      std::ostringstream msg;
      msg << "non-finite state at s=" << s;
      throw Error(ErrorKind::NonFiniteState, msg.str());
    }
  };

  check_finite(x, grid.front());
  std::copy(x.begin(), x.end(), out.state(0).begin());

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double s = grid[i];
    const double h = grid[i + 1] - s;
    const double half = 0.5 * h;

    rhs(s, x, k1);
    for (std::size_t j = 0; j < dim; ++j) tmp[j] = x[j] + half * k1[j];
    rhs(s + half, tmp, k2);
    for (std::size_t j = 0; j < dim; ++j) tmp[j] = x[j] + half * k2[j];
    rhs(s + half, tmp, k3);
    for (std::size_t j = 0; j < dim; ++j) tmp[j] = x[j] + h * k3[j];
    rhs(s + h, tmp, k4);

    for (std::size_t j = 0; j < dim; ++j) {
      const double inc = h / 6.0 * (k1[j] + 2.0 * (k2[j] + k3[j]) + k4[j]);
      // Kahan summation
      const double y = inc - comp[j];
      const double t = x[j] + y;
      comp[j] = (t - x[j]) - y;
      x[j] = t;
    }
    check_finite(x, grid[i + 1]);
    std::copy(x.begin(), x.end(), out.state(i + 1).begin());
  }
  return out;
}

OdeRhs magnetic_system(const KillingField& V) {
  return [V](double, std::span<const double> x, std::span<double> dx) {
    const auto d = magnetic_rhs(V, {x[0], x[1], x[2], x[3]});
    std::copy(d.begin(), d.end(), dx.begin());
  };
}

OdeRhs n_magnetic_system(const KillingField& V, double kappa0) {
  return [V, kappa0](double, std::span<const double> x, std::span<double> dx) {
    const auto d = n_magnetic_rhs(V, kappa0, {x[0], x[1], x[2], x[3], x[4], x[5]});
    std::copy(d.derivative.begin(), d.derivative.end(), dx.begin());
  };
}

OdeRhs b_magnetic_system(const KillingField& V, double kappa0) {
  return [V, kappa0](double, std::span<const double> x, std::span<double> dx) {
    const auto d = b_magnetic_rhs(V, kappa0, {x[0], x[1], x[2], x[3], x[4], x[5]});
    std::copy(d.derivative.begin(), d.derivative.end(), dx.begin());
  };
}

std::vector<double> initial_state(const MagneticIC& ic) {
  return {ic.y0, ic.z0, ic.Y0, ic.Z0};
}

std::vector<double> initial_state(const NMagneticIC& ic) {
  return {ic.y0, ic.z0, ic.Y0, ic.Z0, ic.T0, ic.U0};
}

namespace {

double point_deviation(const ClosedFormCurve& closed, double s,
                       std::span<const double> x, int max_order) {
  double dev = 0.0;
  for (int order = 0; order <= max_order; ++order) {
    const GVector3 v = closed.eval(s, order);
    const std::size_t base = 2 * static_cast<std::size_t>(order);
    dev = std::max({dev, std::abs(x[base] - v.x2), std::abs(x[base + 1] - v.x3)});
  }
  return dev;
}

}  // namespace

double max_deviation(const ClosedFormCurve& closed, const SampledCurve& sampled,
                     Components components, Exec exec) {
  const std::size_t dim = sampled.dim();
  if (dim != 4 && dim != 6) {
    throw Error(ErrorKind::DomainMismatch, "state dimension must be 4 or 6");
  }
  const Interval dom = closed.domain();
  const auto& grid = sampled.grid();
  for (double s : grid) {
    if (!dom.contains(s)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "grid point s=" << s << " outside the curve domain";
      throw Error(ErrorKind::DomainMismatch, msg.str());
    }
  }

  const int max_order =
      components == Components::Position ? 0 : static_cast<int>(dim / 2) - 1;
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  double dev = 0.0;
  if (exec == Exec::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      dev = std::max(dev, point_deviation(closed, grid[k], sampled.state(k), max_order));
    }
  } else {
#pragma omp parallel for reduction(max : dev) schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      dev = std::max(dev, point_deviation(closed, grid[k], sampled.state(k), max_order));
    }
  }
  return dev;
}

SampledCurve integrate_from_origin(const OdeRhs& rhs,
                                   std::span<const double> initial_at_zero,
                                   double s_start, double s_end, double step) {
  validate_interval(s_start, s_end);
  const std::size_t dim = initial_at_zero.size();

  std::optional<SampledCurve> forward;
  if (s_end > 0.0) {
    forward = integrate(rhs, initial_at_zero, {step, 0.0, s_end});
  }
  std::optional<SampledCurve> backward;
  if (s_start < 0.0) {
    const OdeRhs reversed = [&rhs](double s, std::span<const double> x,
                                   std::span<double> dx) {
      rhs(-s, x, dx);
      for (double& d : dx) d = -d;
    };
    backward = integrate(reversed, initial_at_zero, {step, 0.0, -s_start});
  }

  std::vector<double> grid;
  if (backward) {
    const auto& g = backward->grid();
    for (std::size_t i = g.size(); i-- > 0;) grid.push_back(-g[i]);
  }
  if (forward) {
    const auto& g = forward->grid();
    // s = 0 is already present when both runs exist.
    grid.insert(grid.end(), g.begin() + (backward ? 1 : 0), g.end());
  }

  SampledCurve out(std::move(grid), dim);
  std::size_t row = 0;
  if (backward) {
    for (std::size_t i = backward->size(); i-- > 0;) {
      const auto src = backward->state(i);
      std::copy(src.begin(), src.end(), out.state(row++).begin());
    }
  }
  if (forward) {
    for (std::size_t i = backward ? 1 : 0; i < forward->size(); ++i) {
      const auto src = forward->state(i);
      std::copy(src.begin(), src.end(), out.state(row++).begin());
    }
  }
  return out;
}

}  // namespace galmag
