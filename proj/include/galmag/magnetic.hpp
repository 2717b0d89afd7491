#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "galmag/curve.hpp"
#include "galmag/galilean.hpp"

namespace galmag {

/// Constant-coefficient Killing field V = v1 dx + v2 dy + v3 dz.
struct KillingField {
  double v1 = 0.0;
  double v2 = 0.0;
  double v3 = 0.0;

  constexpr GVector3 vector() const { return {v1, v2, v3}; }
  constexpr bool is_isotropic() const { return v1 == 0.0; }
  constexpr bool is_zero() const { return v1 == 0.0 && v2 == 0.0 && v3 == 0.0; }
};

/// Initial data at s = 0 for magnetic trajectories.
struct MagneticIC {
  double y0 = 0.0;
  double Y0 = 0.0;  // y'(0)
  double z0 = 0.0;
  double Z0 = 0.0;  // z'(0)
};

/// Initial data at s = 0 for N-magnetic trajectories; adds y''(0), z''(0).
struct NMagneticIC {
  double y0 = 0.0;
  double Y0 = 0.0;
  double T0 = 0.0;  // y''(0)
  double z0 = 0.0;
  double Z0 = 0.0;
  double U0 = 0.0;  // z''(0)
};

enum class CurveCase {
  MagneticIsotropic,     // parabola, V isotropic
  MagneticNonIsotropic,  // cylindrical helix, v1 != 0
  NMagI,                 // V = 0
  NMagII,                // v1 = v2 = 0, v3 != 0
  NMagIII,               // v1 = v3 = 0, v2 != 0
  NMagIV,                // v1 = 0, v2 != 0, v3 != 0
  NMagV,                 // v1 != 0, helix
};

std::string_view to_string(CurveCase c) noexcept;
bool is_helix_case(CurveCase c) noexcept;
bool is_n_magnetic_case(CurveCase c) noexcept;

/// c0 + c1 s + c2 s^2 + a cos(w s) + b sin(w s)
struct Profile {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double cos_amp = 0.0;
  double sin_amp = 0.0;

  double eval(double s, double omega, int order) const;
};

/// Closed-form magnetic or N-magnetic trajectory. Stores the coefficients of
/// y and z rather than samples, so it can be evaluated exactly anywhere.
class ClosedFormCurve final : public C3Curve {
 public:
  using InitialData = std::variant<MagneticIC, NMagneticIC>;

  ClosedFormCurve(CurveCase kind, KillingField field, InitialData ic,
                  Profile y, Profile z, double omega);

  GVector3 eval(double s, int order) const override;
  Interval domain() const override { return domain_; }

  /// Copy restricted to [lo, hi].
  ClosedFormCurve restricted(double lo, double hi) const;

  CurveCase kind() const { return kind_; }
  const KillingField& field() const { return field_; }
  const InitialData& initial_data() const { return ic_; }
  const Profile& y_profile() const { return y_; }
  const Profile& z_profile() const { return z_; }
  /// Angular frequency of the oscillatory part (0 for polynomial cases).
  double omega() const { return omega_; }
  /// sqrt(T0^2 + U0^2) for N-magnetic curves; unset for magnetic curves.
  std::optional<double> kappa0() const;

  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

 private:
  CurveCase kind_;
  KillingField field_;
  InitialData ic_;
  Profile y_;
  Profile z_;
  double omega_;
  Interval domain_{};
  std::vector<std::string> warnings_;
};

/// Admissible straight line s -> (s, a s + b, c s + d).
struct AxisLine {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  constexpr GVector3 at(double s) const { return {s, a * s + b, c * s + d}; }
};

/// The helix lives on S^1(r) x l: gamma(s) - l(s) is isotropic with norm r.
struct HelixData {
  double r = 0.0;
  AxisLine axis;
};

struct SolveOptions {
  /// Relative tolerance of the v1 = 0 compatibility constraint
  /// |v2 U0 - v3 T0| <= tol * (1 + |v2 U0| + |v3 T0|).
  double constraint_tol = 1e-12;
};

/// Result of the third-order right-hand sides. The state layout is
/// (y, z, y', z', y'', z'').
struct ThirdOrderRhs {
  std::array<double, 6> derivative{};
  /// Algebraic constraint value for v1 = 0 (0 when v1 != 0).
  double constraint = 0.0;
};

/// Lorentz force V x_G X.
GVector3 lorentz_force(const KillingField& V, const GVector3& X);

/// state = (y, z, y', z') -> (y', z', y'', z'') with
/// y'' = v3 - v1 z', z'' = v1 y' - v2.
std::array<double, 4> magnetic_rhs(const KillingField& V,
                                   const std::array<double, 4>& state);

/// N' = V x_G N with N = (0, y'', z'') / kappa0.
ThirdOrderRhs n_magnetic_rhs(const KillingField& V, double kappa0,
                             const std::array<double, 6>& state);

/// B' = V x_G B with B = (0, -z'', y'') / kappa0.
ThirdOrderRhs b_magnetic_rhs(const KillingField& V, double kappa0,
                             const std::array<double, 6>& state);

ClosedFormCurve solve_magnetic(const KillingField& V, const MagneticIC& ic);

/// Throws ZeroCurvature when T0 = U0 = 0 and IncompatibleIC when a v1 = 0
/// case violates v2 U0 - v3 T0 = 0.
ClosedFormCurve solve_n_magnetic(const KillingField& V, const NMagneticIC& ic,
                                 const SolveOptions& opts = {});

/// Radius and axis of a helix-case curve. Throws WrongCase otherwise.
HelixData helix_decomposition(const ClosedFormCurve& c);

}  // namespace galmag
