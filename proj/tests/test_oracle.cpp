#include <doctest.h>

#include <cmath>
#include <numbers>

#include "galmag/error.hpp"
#include "galmag/oracle.hpp"

using namespace galmag;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected galmag::Error");
  return ErrorKind::InvalidConfig;
}

}  // namespace

TEST_CASE("make_grid") {
  auto g = make_grid(0, 1, 0.25);
  REQUIRE(g.size() == 5);
  CHECK(g.back() == 1.0);

  g = make_grid(0, 1, 0.3);
  REQUIRE(g.size() == 5);
  CHECK(g[3] == doctest::Approx(0.9));
  CHECK(g.back() == 1.0);

  // 2pi is not a multiple of 1e-3: the last step is shortened.
  g = make_grid(0, 2 * kPi, 1e-3);
  CHECK(g.size() == 6285);
  CHECK(g.back() == 2 * kPi);
  CHECK(g[g.size() - 1] - g[g.size() - 2] < 1e-3);

  CHECK(kind_of([] { make_grid(0, 1, 0); }) == ErrorKind::InvalidConfig);
  CHECK(kind_of([] { make_grid(1, 1, 0.1); }) == ErrorKind::InvalidConfig);
  CHECK(kind_of([] { make_grid(0, 1e9, 1e-3); }) == ErrorKind::InvalidConfig);
}

TEST_CASE("linspace") {
  const auto g = linspace(-1, 1, 5);
  CHECK(g == std::vector<double>{-1, -0.5, 0, 0.5, 1});
  CHECK(kind_of([] { linspace(0, 1, 1); }) == ErrorKind::InvalidConfig);
}

TEST_CASE("RK4 is exact on straight lines") {
  const MagneticIC ic{1.5, -2, 0.25, 3};
  const auto sampled =
      integrate(magnetic_system({0, 0, 0}), initial_state(ic), {1e-3, 0, 1});
  CHECK(sampled.dim() == 4);
  for (std::size_t i = 0; i < sampled.size(); ++i) {
    const double s = sampled.grid()[i];
    const auto x = sampled.state(i);
    CHECK(std::abs(x[0] - (ic.Y0 * s + ic.y0)) < 1e-12);
    CHECK(std::abs(x[1] - (ic.Z0 * s + ic.z0)) < 1e-12);
  }
  CHECK(max_deviation(solve_magnetic({0, 0, 0}, ic), sampled, Components::FullState) <
        1e-12);
}

TEST_CASE("RK4 against the (0,1,1) parabola and the unit helix") {
  const MagneticIC ex{1, 5, 4, 3};
  const KillingField V{0, 1, 1};
  const auto sampled = integrate(magnetic_system(V), initial_state(ex), {1e-3, 0, kPi});
  CHECK(max_deviation(solve_magnetic(V, ex), sampled) < 1e-10);

  const KillingField H{1, 0, 0};
  const MagneticIC hic{0, 0, 0, 1};
  const auto helix =
      integrate(magnetic_system(H), initial_state(hic), {1e-3, 0, 2 * kPi});
  const auto closed = solve_magnetic(H, hic);
  CHECK(max_deviation(closed, helix) < 1e-9);
  CHECK(max_deviation(closed, helix, Components::FullState) < 1e-9);
}

TEST_CASE("RK4 against N-magnetic case v") {
  const KillingField V{1, 0, 0};
  const NMagneticIC ic{0, 0, 1, 0, 0, 0};
  const auto sampled = integrate(n_magnetic_system(V, 1.0), initial_state(ic),
                                 {1e-3, 0, 2 * kPi});
  CHECK(sampled.dim() == 6);
  CHECK(max_deviation(solve_n_magnetic(V, ic), sampled, Components::FullState) < 1e-9);
}

TEST_CASE("max_deviation of a closed form against its own samples is zero") {
  const auto c = solve_magnetic({0.7, -1, 2}, {1, 2, 3, 4});
  SampledCurve exact(linspace(0, 3, 100), 4);
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double s = exact.grid()[i];
    auto x = exact.state(i);
    x[0] = c.eval(s, 0).x2;
    x[1] = c.eval(s, 0).x3;
    x[2] = c.eval(s, 1).x2;
    x[3] = c.eval(s, 1).x3;
  }
  CHECK(max_deviation(c, exact, Components::FullState, Exec::Serial) == 0.0);
  CHECK(max_deviation(c, exact, Components::FullState, Exec::Parallel) == 0.0);
}

TEST_CASE("max_deviation domain checks") {
  const auto c = solve_magnetic({1, 0, 0}, {0, 0, 0, 1}).restricted(0, 1);
  SampledCurve outside(linspace(0, 2, 10), 4);
  CHECK(kind_of([&] { max_deviation(c, outside); }) == ErrorKind::DomainMismatch);
  SampledCurve odd_dim(linspace(0, 1, 10), 5);
  CHECK(kind_of([&] { max_deviation(c, odd_dim); }) == ErrorKind::DomainMismatch);
}

TEST_CASE("non-finite states are reported") {
  const OdeRhs blowup = [](double, std::span<const double> x, std::span<double> dx) {
    dx[0] = x[0] * x[0];
  };
  const std::vector<double> x0{1.0};
  CHECK(kind_of([&] { integrate(blowup, x0, {1e-2, 0, 5}); }) ==
        ErrorKind::NonFiniteState);
}

TEST_CASE("convergence order on the helix") {
  const KillingField V{1, 0, 0};
  const MagneticIC ic{0, 0, 0, 1};
  const auto closed = solve_magnetic(V, ic);
  const double coarse = max_deviation(
      closed, integrate(magnetic_system(V), initial_state(ic), {1e-2, 0, 2 * kPi}));
  const double fine = max_deviation(
      closed, integrate(magnetic_system(V), initial_state(ic), {5e-3, 0, 2 * kPi}));
  const double ratio = coarse / fine;
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("polynomial solutions are integrated to rounding level") {
  const KillingField V{0, 1.5, -2};
  const NMagneticIC ic{1, -1, 2, 0.5, 3, 0};
  for (double step : {1e-1, 1e-2, 1e-3}) {
    const MagneticIC m{ic.y0, ic.Y0, ic.z0, ic.Z0};
    const auto a = integrate(magnetic_system(V), initial_state(m), {step, 0, 3});
    CHECK(max_deviation(solve_magnetic(V, m), a) < 1e-11);
    const NMagneticIC flat{1, -1, 2, 0.5, 3, 0};
    const auto b = integrate(n_magnetic_system({0, 0, 0}, 2.0), initial_state(flat),
                             {step, 0, 3});
    CHECK(max_deviation(solve_n_magnetic({0, 0, 0}, flat), b) < 1e-11);
  }
}

TEST_CASE("constraint violation is constant along the flow") {
  // v1 = 0 and data violating v2 z'' - v3 y'' = 0: the raw system keeps the
  // violation fixed because y''' = z''' = 0.
  const KillingField V{0, 1, 2};
  const NMagneticIC ic{0, 0, 1, 0, 0, 1};
  const auto sampled =
      integrate(n_magnetic_system(V, std::sqrt(2.0)), initial_state(ic), {1e-2, 0, 4});
  for (std::size_t i = 0; i < sampled.size(); ++i) {
    const auto x = sampled.state(i);
    CHECK(V.v2 * x[5] - V.v3 * x[4] == -1.0);
  }
}

TEST_CASE("integrate_from_origin covers negative parameters") {
  const KillingField V{1.3, 0.2, -0.4};
  const MagneticIC ic{0.5, 1, -1, 2};
  const auto closed = solve_magnetic(V, ic);
  const auto both =
      integrate_from_origin(magnetic_system(V), initial_state(ic), -2, 3, 1e-3);
  CHECK(both.grid().front() == -2.0);
  CHECK(both.grid().back() == 3.0);
  for (std::size_t i = 1; i < both.size(); ++i) {
    CHECK(both.grid()[i] > both.grid()[i - 1]);
  }
  CHECK(max_deviation(closed, both, Components::FullState) < 1e-9);

  const auto right =
      integrate_from_origin(magnetic_system(V), initial_state(ic), 1, 2, 1e-3);
  CHECK(right.grid().front() == 0.0);
  const auto left =
      integrate_from_origin(magnetic_system(V), initial_state(ic), -2, -1, 1e-3);
  CHECK(left.grid().back() == 0.0);
  CHECK(max_deviation(closed, left) < 1e-9);
}

TEST_CASE("B-magnetic system integrates") {
  const KillingField V{2, 0, 0};
  const NMagneticIC ic{0, 0, 1, 0, 0, 0};
  const auto sampled =
      integrate(b_magnetic_system(V, 1.0), initial_state(ic), {1e-3, 0, 1});
  // Same third-order system as N-magnetic when v1 != 0.
  CHECK(max_deviation(solve_n_magnetic(V, ic), sampled, Components::FullState) < 1e-9);
}
