#include "galmag/magnetic.hpp"

#include <cmath>
#include <sstream>

#include "galmag/error.hpp"

namespace galmag {

std::string_view to_string(CurveCase c) noexcept {
  switch (c) {
    case CurveCase::MagneticIsotropic: return "magnetic-isotropic";
    case CurveCase::MagneticNonIsotropic: return "magnetic-nonisotropic";
    case CurveCase::NMagI: return "nmagnetic-i";
    case CurveCase::NMagII: return "nmagnetic-ii";
    case CurveCase::NMagIII: return "nmagnetic-iii";
    case CurveCase::NMagIV: return "nmagnetic-iv";
    case CurveCase::NMagV: return "nmagnetic-v";
  }
  return "unknown";
}

bool is_helix_case(CurveCase c) noexcept {
  return c == CurveCase::MagneticNonIsotropic || c == CurveCase::NMagV;
}

bool is_n_magnetic_case(CurveCase c) noexcept {
  return c != CurveCase::MagneticIsotropic &&
         c != CurveCase::MagneticNonIsotropic;
}

double Profile::eval(double s, double omega, int order) const {
  double poly = 0.0;
  switch (order) {
    case 0: poly = c0 + s * (c1 + s * c2); break;
    case 1: poly = c1 + 2.0 * c2 * s; break;
    case 2: poly = 2.0 * c2; break;
    case 3: poly = 0.0; break;
    default:
      throw Error(ErrorKind::InvalidConfig, "derivative order must be 0..3");
  }
  if (cos_amp == 0.0 && sin_amp == 0.0) return poly;

  // d^k/ds^k of (a cos + b sin) cycles with period 4.
  const double c = std::cos(omega * s);
  const double sn = std::sin(omega * s);
  double scale = 1.0;
  for (int k = 0; k < order; ++k) scale *= omega;
  double osc = 0.0;
  switch (order) {
    case 0: osc = cos_amp * c + sin_amp * sn; break;
    case 1: osc = -cos_amp * sn + sin_amp * c; break;
    case 2: osc = -cos_amp * c - sin_amp * sn; break;
    case 3: osc = cos_amp * sn - sin_amp * c; break;
  }
  return poly + scale * osc;
}

ClosedFormCurve::ClosedFormCurve(CurveCase kind, KillingField field,
                                 InitialData ic, Profile y, Profile z,
                                 double omega)
    : kind_(kind), field_(field), ic_(ic), y_(y), z_(z), omega_(omega) {}

GVector3 ClosedFormCurve::eval(double s, int order) const {
  const double y = y_.eval(s, omega_, order);
  const double z = z_.eval(s, omega_, order);
  switch (order) {
    case 0: return {s, y, z};
    case 1: return {1.0, y, z};
    default: return {0.0, y, z};
  }
}

ClosedFormCurve ClosedFormCurve::restricted(double lo, double hi) const {
  if (!(lo <= hi)) {
    throw Error(ErrorKind::InvalidConfig, "domain requires lo <= hi");
  }
  ClosedFormCurve out = *this;
  out.domain_ = {lo, hi};
  return out;
}

std::optional<double> ClosedFormCurve::kappa0() const {
  if (const auto* n = std::get_if<NMagneticIC>(&ic_)) {
    return std::hypot(n->T0, n->U0);
  }
  return std::nullopt;
}

GVector3 lorentz_force(const KillingField& V, const GVector3& X) {
  return cross(V.vector(), X);
}

std::array<double, 4> magnetic_rhs(const KillingField& V,
                                   const std::array<double, 4>& state) {
  const double yd = state[2];
  const double zd = state[3];
  return {yd, zd, V.v3 - V.v1 * zd, V.v1 * yd - V.v2};
}

namespace {

void require_positive_kappa(double kappa0) {
  if (!(kappa0 > 0.0)) {
    throw Error(ErrorKind::InvalidConfig, "kappa0 must be positive");
  }
}

void warn_tiny_v1(ClosedFormCurve& c, double v1) {
  if (v1 != 0.0 && std::abs(v1) < 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "|v1| = " << std::abs(v1)
        << " is below 1e-12; helix radius scales like 1/v1^2";
    c.add_warning(msg.str());
  }
}

}  // namespace

ThirdOrderRhs n_magnetic_rhs(const KillingField& V, double kappa0,
                             const std::array<double, 6>& state) {
  require_positive_kappa(kappa0);
  const double ydd = state[4];
  const double zdd = state[5];
  ThirdOrderRhs out;
  out.derivative = {state[2], state[3], ydd, zdd, 0.0, 0.0};
  if (V.v1 != 0.0) {
    out.derivative[4] = -V.v1 * zdd;
    out.derivative[5] = V.v1 * ydd;
  } else {
    out.constraint = V.v2 * zdd - V.v3 * ydd;
  }
  return out;
}

ThirdOrderRhs b_magnetic_rhs(const KillingField& V, double kappa0,
                             const std::array<double, 6>& state) {
  require_positive_kappa(kappa0);
  const double ydd = state[4];
  const double zdd = state[5];
  ThirdOrderRhs out;
  out.derivative = {state[2], state[3], ydd, zdd, 0.0, 0.0};
  if (V.v1 != 0.0) {
    // B' = (0, -z''', y''')/k0 against V x B = (0, -v1 y'', -v1 z'')/k0.
    out.derivative[4] = -V.v1 * zdd;
    out.derivative[5] = V.v1 * ydd;
  } else {
    out.constraint = V.v2 * ydd + V.v3 * zdd;
  }
  return out;
}

ClosedFormCurve solve_magnetic(const KillingField& V, const MagneticIC& ic) {
  if (V.v1 == 0.0) {
    const Profile y{ic.y0, ic.Y0, 0.5 * V.v3, 0.0, 0.0};
    const Profile z{ic.z0, ic.Z0, -0.5 * V.v2, 0.0, 0.0};
    return ClosedFormCurve(CurveCase::MagneticIsotropic, V, ic, y, z, 0.0);
  }

  const double v1 = V.v1;
  const double a = (ic.Z0 - V.v3 / v1) / v1;
  const double b = (ic.Y0 - V.v2 / v1) / v1;
  const Profile y{ic.y0 - a, V.v2 / v1, 0.0, a, b};
  const Profile z{ic.z0 + b, V.v3 / v1, 0.0, -b, a};
  ClosedFormCurve c(CurveCase::MagneticNonIsotropic, V, ic, y, z, v1);
  warn_tiny_v1(c, v1);
  return c;
}

ClosedFormCurve solve_n_magnetic(const KillingField& V, const NMagneticIC& ic,
                                 const SolveOptions& opts) {
  if (ic.T0 == 0.0 && ic.U0 == 0.0) {
    throw Error(ErrorKind::ZeroCurvature,
                "N-magnetic curves need T0^2 + U0^2 > 0");
  }

  if (V.v1 != 0.0) {
    const double v1 = V.v1;
    const double v1_sq = v1 * v1;
    const Profile y{ic.y0 + ic.T0 / v1_sq, ic.Y0 - ic.U0 / v1, 0.0,
                    -ic.T0 / v1_sq, ic.U0 / v1_sq};
    const Profile z{ic.z0 + ic.U0 / v1_sq, ic.Z0 + ic.T0 / v1, 0.0,
                    -ic.U0 / v1_sq, -ic.T0 / v1_sq};
    ClosedFormCurve c(CurveCase::NMagV, V, ic, y, z, v1);
    warn_tiny_v1(c, v1);
    return c;
  }

  // v1 = 0: y''' = z''' = 0, so y'' = T0 and z'' = U0 throughout and the
  // third equation v2 z'' - v3 y'' = 0 becomes a condition on the data.
  const double lhs = V.v2 * ic.U0;
  const double rhs = V.v3 * ic.T0;
  const double constraint = lhs - rhs;
  const double bound =
      opts.constraint_tol * (1.0 + std::abs(lhs) + std::abs(rhs));
  if (!(std::abs(constraint) <= bound)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "v2*U0 - v3*T0 = " << constraint << " violates the v1 = 0 constraint";
    throw Error(ErrorKind::IncompatibleIC, msg.str());
  }

  CurveCase kind = CurveCase::NMagIV;
  if (V.v2 == 0.0 && V.v3 == 0.0) {
    kind = CurveCase::NMagI;
  } else if (V.v2 == 0.0) {
    kind = CurveCase::NMagII;
  } else if (V.v3 == 0.0) {
    kind = CurveCase::NMagIII;
  }

  Profile y{ic.y0, ic.Y0, 0.5 * ic.T0, 0.0, 0.0};
  Profile z{ic.z0, ic.Z0, 0.5 * ic.U0, 0.0, 0.0};
  // Within tolerance the constrained second derivative is zero.
  if (kind == CurveCase::NMagII) y.c2 = 0.0;
  if (kind == CurveCase::NMagIII) z.c2 = 0.0;
  return ClosedFormCurve(kind, V, ic, y, z, 0.0);
}

HelixData helix_decomposition(const ClosedFormCurve& c) {
  const KillingField& V = c.field();
  const double v1 = V.v1;
  const double v1_sq = v1 * v1;

  if (c.kind() == CurveCase::MagneticNonIsotropic) {
    const auto& ic = std::get<MagneticIC>(c.initial_data());
    const double dz = ic.Z0 / v1 - V.v3 / v1_sq;
    const double dy = ic.Y0 / v1 - V.v2 / v1_sq;
    HelixData h;
    h.r = std::hypot(dz, dy);
    h.axis = {V.v2 / v1, ic.y0 - ic.Z0 / v1 + V.v3 / v1_sq, V.v3 / v1,
              ic.z0 + ic.Y0 / v1 - V.v2 / v1_sq};
    return h;
  }
  if (c.kind() == CurveCase::NMagV) {
    const auto& ic = std::get<NMagneticIC>(c.initial_data());
    HelixData h;
    h.r = std::hypot(ic.T0 / v1_sq, ic.U0 / v1_sq);
    h.axis = {ic.Y0 - ic.U0 / v1, ic.y0 + ic.T0 / v1_sq, ic.Z0 + ic.T0 / v1,
              ic.z0 + ic.U0 / v1_sq};
    return h;
  }
  throw Error(ErrorKind::WrongCase,
              std::string("helix decomposition needs a helix case, got ") +
                  std::string(to_string(c.kind())));
}

}  // namespace galmag
