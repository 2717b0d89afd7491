#pragma once

#include <cmath>
#include <ostream>

namespace galmag {

/// Vector of the Galilean 3-space. The first component is the absolute
/// (non-isotropic) direction; x2, x3 span the isotropic Euclidean plane.
struct GVector3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  friend constexpr bool operator==(const GVector3&, const GVector3&) = default;

  constexpr GVector3& operator+=(const GVector3& o) {
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr GVector3& operator-=(const GVector3& o) {
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  constexpr GVector3& operator*=(double a) {
    x1 *= a;
    x2 *= a;
    x3 *= a;
    return *this;
  }
};

constexpr GVector3 operator+(GVector3 a, const GVector3& b) { return a += b; }
constexpr GVector3 operator-(GVector3 a, const GVector3& b) { return a -= b; }
constexpr GVector3 operator-(const GVector3& a) { return {-a.x1, -a.x2, -a.x3}; }
constexpr GVector3 operator*(double s, GVector3 a) { return a *= s; }
constexpr GVector3 operator*(GVector3 a, double s) { return a *= s; }
constexpr GVector3 operator/(GVector3 a, double s) {
  return {a.x1 / s, a.x2 / s, a.x3 / s};
}

std::ostream& operator<<(std::ostream& os, const GVector3& v);

enum class IsotropyClass { NonIsotropic, Isotropic };

// All branch selections below compare x1 against zero exactly. Near-zero
// first components are deliberately not snapped.

constexpr IsotropyClass classify(const GVector3& v) {
  return v.x1 != 0.0 ? IsotropyClass::NonIsotropic : IsotropyClass::Isotropic;
}

constexpr bool is_isotropic(const GVector3& v) { return v.x1 == 0.0; }

/// Galilean scalar product: x1*y1 if either vector is non-isotropic,
/// otherwise the Euclidean product of the isotropic parts.
constexpr double scalar_product(const GVector3& x, const GVector3& y) {
  if (x.x1 != 0.0 || y.x1 != 0.0) return x.x1 * y.x1;
  return x.x2 * y.x2 + x.x3 * y.x3;
}

/// |x1| for non-isotropic vectors, Euclidean length of (x2, x3) otherwise.
inline double norm(const GVector3& v) {
  if (v.x1 != 0.0) return std::abs(v.x1);
  return std::hypot(v.x2, v.x3);
}

/// Galilean cross product. If either argument is non-isotropic the result is
/// isotropic, (0, -(x1 y3 - x3 y1), x1 y2 - x2 y1); if both are isotropic the
/// result is (x2 y3 - x3 y2, 0, 0).
constexpr GVector3 cross(const GVector3& x, const GVector3& y) {
  if (x.x1 != 0.0 || y.x1 != 0.0) {
    return {0.0, -(x.x1 * y.x3 - x.x3 * y.x1), x.x1 * y.x2 - x.x2 * y.x1};
  }
  return {x.x2 * y.x3 - x.x3 * y.x2, 0.0, 0.0};
}

}  // namespace galmag
