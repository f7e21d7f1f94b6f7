#ifndef BJORTHO_HIGHDIM_HPP
#define BJORTHO_HIGHDIM_HPP

#include <cmath>
#include <utility>

#include "error.hpp"
#include "norm.hpp"
#include "ortho.hpp"
#include "vector.hpp"

namespace bjortho {

/// The plane span{basis_x, basis_y} of an ambient normed space, with the
/// induced norm written in coefficient coordinates (a, b) -> a basis_x + b basis_y.
class PlaneSection {
public:
  PlaneSection(const Norm& ambient, VectorN basis_x, VectorN basis_y)
      : norm_(Norm::section(ambient, basis_x, basis_y)),
        basis_x_(std::move(basis_x)),
        basis_y_(std::move(basis_y)) {}

  /// The induced 2-D norm; usable anywhere a 2-D Norm is.
  const Norm& norm() const { return norm_; }
  const VectorN& basis_x() const { return basis_x_; }
  const VectorN& basis_y() const { return basis_y_; }
  const Norm& ambient() const { return *std::get<SectionNorm>(norm_.kind()).ambient; }

  VectorN lift(const VectorN& coeffs) const {
    if (coeffs.dim() != 2) throw InputError("section coefficients are 2-dimensional");
    return coeffs[0] * basis_x_ + coeffs[1] * basis_y_;
  }

  /// Coefficients (a, b) of the point of the plane closest (Euclidean) to v;
  /// exact when v lies in the plane.
  VectorN coefficients(const VectorN& v) const {
    const double xx = dot(basis_x_, basis_x_), xy = dot(basis_x_, basis_y_);
    const double yy = dot(basis_y_, basis_y_);
    const double vx = dot(v, basis_x_), vy = dot(v, basis_y_);
    const double det = xx * yy - xy * xy;
    return VectorN{(vx * yy - vy * xy) / det, (vy * xx - vx * xy) / det};
  }

private:
  Norm norm_;
  VectorN basis_x_;
  VectorN basis_y_;
};

/// Restriction of the norm to span{x, y}.
inline PlaneSection restrict_norm(const Norm& norm, const VectorN& x, const VectorN& y) {
  norm.require_dim(x);
  norm.require_dim(y);
  return PlaneSection(norm, x, y);
}

/// y in F(x, eps), evaluated directly in the ambient dimension.
inline bool f_membership(const Norm& norm, const VectorN& x, double eps, const VectorN& y) {
  return is_approx_orth_D(norm, x, y, eps);
}

/// y in G(x, eps), evaluated directly in the ambient dimension.
inline bool g_membership(const Norm& norm, const VectorN& x, double eps, const VectorN& y) {
  return is_approx_orth_B(norm, x, y, eps);
}

} // namespace bjortho

#endif // BJORTHO_HIGHDIM_HPP
