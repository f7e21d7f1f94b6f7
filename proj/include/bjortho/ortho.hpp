#ifndef BJORTHO_ORTHO_HPP
#define BJORTHO_ORTHO_HPP

#include <cmath>

#include "error.hpp"
#include "minimize.hpp"
#include "norm.hpp"
#include "vector.hpp"

namespace bjortho {

/// One-sided tolerance band of every predicate: boundary cases resolve as
/// orthogonal. Tolerances are relative (to ||x|| or ||y||) so that the
/// predicates are invariant under rescaling x and y.
inline constexpr double kOrthTol = 1e-9;

namespace detail {

inline void check_eps(double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) throw InputError("eps must lie in [0, 1)");
}

inline void check_pair(const Norm& norm, const VectorN& x, const VectorN& y) {
  norm.require_dim(x);
  norm.require_dim(y);
  if (x.is_zero()) throw InputError("x must be nonzero");
}

} // namespace detail

/// ||x + lambda y|| >= ||x|| for every real lambda. The zero direction is
/// orthogonal to everything.
inline bool is_bj_orthogonal(const Norm& norm, const VectorN& x, const VectorN& y) {
  detail::check_pair(norm, x, y);
  if (y.is_zero()) return true;
  const double nx = norm.value(x);
  return dist_to_line(norm, x, y).value >= nx * (1.0 - kOrthTol);
}

/// y in x^+ : ||x + lambda y|| >= ||x|| for all lambda >= 0. By convexity this
/// is equivalent to tau_+(x, y) >= 0.
inline bool in_x_plus(const Norm& norm, const VectorN& x, const VectorN& y) {
  detail::check_pair(norm, x, y);
  if (y.is_zero()) return true;
  return one_sided_derivative(norm, x, y, Side::plus) >= -kOrthTol * norm.value(y);
}

/// y in x^- : ||x + lambda y|| >= ||x|| for all lambda <= 0.
inline bool in_x_minus(const Norm& norm, const VectorN& x, const VectorN& y) {
  detail::check_pair(norm, x, y);
  if (y.is_zero()) return true;
  return one_sided_derivative(norm, x, y, Side::minus) <= kOrthTol * norm.value(y);
}

/// inf_lambda ||x + lambda y|| >= sqrt(1 - eps^2) ||x||.
inline bool is_approx_orth_D(const Norm& norm, const VectorN& x, const VectorN& y, double eps) {
  detail::check_eps(eps);
  detail::check_pair(norm, x, y);
  if (y.is_zero()) return true;
  const double nx = norm.value(x);
  return dist_to_line(norm, x, y).value / nx >= std::sqrt(1.0 - eps * eps) - kOrthTol;
}

/// ||x + lambda y||^2 >= ||x||^2 - 2 eps ||x|| ||lambda y|| for every lambda.
inline bool is_approx_orth_B(const Norm& norm, const VectorN& x, const VectorN& y, double eps) {
  detail::check_eps(eps);
  detail::check_pair(norm, x, y);
  if (y.is_zero()) return true;
  const double nx = norm.value(x);
  return min_B_functional(norm, x, y, eps) / (nx * nx) >= -kOrthTol;
}

/// Least eps for which is_approx_orth_D holds; 1 for collinear pairs.
inline double eps_D_min(const Norm& norm, const VectorN& x, const VectorN& y) {
  detail::check_pair(norm, x, y);
  if (y.is_zero()) throw InputError("y must be nonzero");
  if (collinear(x, y)) return 1.0;
  const double r = dist_to_line(norm, x, y).value / norm.value(x);
  return std::sqrt(std::max(0.0, 1.0 - r * r));
}

/// Least eps for which is_approx_orth_B holds; 1 for collinear pairs.
inline double eps_B_min(const Norm& norm, const VectorN& x, const VectorN& y) {
  detail::check_pair(norm, x, y);
  if (y.is_zero()) throw InputError("y must be nonzero");
  return sup_B_ratio(norm, x, y).value;
}

/// Orthogonality profile of a pair (x, y).
struct OrthReport {
  bool bj;
  bool in_plus;
  bool in_minus;
  double eps_D_min;
  double eps_B_min;
  bool degenerate;  ///< y collinear with x; both eps values are then 1
};

inline OrthReport orth_report(const Norm& norm, const VectorN& x, const VectorN& y) {
  detail::check_pair(norm, x, y);
  if (y.is_zero()) return {true, true, true, 0.0, 0.0, false};
  const bool degenerate = collinear(x, y);
  return {is_bj_orthogonal(norm, x, y),
          in_x_plus(norm, x, y),
          in_x_minus(norm, x, y),
          eps_D_min(norm, x, y),
          eps_B_min(norm, x, y),
          degenerate};
}

} // namespace bjortho

#endif // BJORTHO_ORTHO_HPP
