#ifndef BJORTHO_VECTOR_HPP
#define BJORTHO_VECTOR_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace bjortho {

/// Coordinate vector in R^n. Coordinates are always finite and n >= 1.
class VectorN {
public:
  VectorN(std::initializer_list<double> coords) : coords_(coords) { validate(); }
  explicit VectorN(std::vector<double> coords) : coords_(std::move(coords)) { validate(); }

  static VectorN zero(std::size_t dim) { return VectorN(std::vector<double>(dim, 0.0)); }

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
  }

  VectorN& operator+=(const VectorN& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  VectorN& operator-=(const VectorN& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  VectorN& operator*=(double s) {
    for (double& c : coords_) c *= s;
    return *this;
  }

  friend VectorN operator+(VectorN a, const VectorN& b) { return a += b; }
  friend VectorN operator-(VectorN a, const VectorN& b) { return a -= b; }
  friend VectorN operator*(double s, VectorN v) { return v *= s; }
  friend VectorN operator*(VectorN v, double s) { return v *= s; }
  friend VectorN operator-(VectorN v) { return v *= -1.0; }

  friend bool operator==(const VectorN&, const VectorN&) = default;

  void require_same_dim(const VectorN& o) const {
    if (o.dim() != dim())
      throw InputError("dimension mismatch: " + std::to_string(dim()) + " vs " +
                       std::to_string(o.dim()));
  }

private:
  void validate() const {
    if (coords_.empty()) throw InputError("vector must have at least one coordinate");
    for (double c : coords_)
      if (!std::isfinite(c)) throw InputError("vector coordinates must be finite");
  }

  std::vector<double> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const VectorN& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

/// Euclidean helpers. These are coordinate-level utilities (angles, collinearity),
/// never a substitute for the ambient norm.
inline double dot(const VectorN& a, const VectorN& b) {
  a.require_same_dim(b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double euclidean_length(const VectorN& v) { return std::sqrt(dot(v, v)); }

inline double cross2(const VectorN& a, const VectorN& b) { return a[0] * b[1] - a[1] * b[0]; }

/// Angle of a 2-D vector in [0, 2*pi).
inline double polar_angle(const VectorN& v) {
  double a = std::atan2(v[1], v[0]);
  return a < 0.0 ? a + 2.0 * M_PI : a;
}

/// Unsigned angle between two nonzero vectors, in [0, pi].
inline double angle_between(const VectorN& a, const VectorN& b) {
  if (a.dim() == 2 && b.dim() == 2) return std::abs(std::atan2(cross2(a, b), dot(a, b)));
  const double c = dot(a, b) / (euclidean_length(a) * euclidean_length(b));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

/// True when b is a scalar multiple of a (either may be zero), judged by the
/// sine of the angle between them.
inline bool collinear(const VectorN& a, const VectorN& b, double sin_tol = 1e-12) {
  a.require_same_dim(b);
  const double na = euclidean_length(a), nb = euclidean_length(b);
  if (na == 0.0 || nb == 0.0) return true;
  const double k = dot(a, b) / (na * na);
  double r2 = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double r = b[i] - k * a[i];
    r2 += r * r;
  }
  return std::sqrt(r2) <= sin_tol * nb;
}

} // namespace bjortho

#endif // BJORTHO_VECTOR_HPP
