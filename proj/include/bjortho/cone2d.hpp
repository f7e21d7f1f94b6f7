#ifndef BJORTHO_CONE2D_HPP
#define BJORTHO_CONE2D_HPP

#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "minimize.hpp"
#include "norm.hpp"
#include "ortho.hpp"
#include "vector.hpp"

namespace bjortho {

/// Normal cone K = {a v1 + b v2 : a, b >= 0} in the plane, given by its
/// boundary unit vectors. v1 == v2 is a half-line; v1 == -v2 is not a cone.
struct NormalCone2D {
  VectorN v1;
  VectorN v2;
};

/// K together with its reflection: the set K u (-K).
struct ConePair {
  NormalCone2D cone;

  bool contains(const VectorN& v) const;
};

/// Cone from two nonzero boundary directions, normalized in the given norm.
inline NormalCone2D make_cone(const Norm& norm, const VectorN& a, const VectorN& b) {
  if (norm.dim() != 2) throw InputError("normal cones are 2-dimensional");
  NormalCone2D cone{normalize(norm, a), normalize(norm, b)};
  if (angle_between(cone.v1, -cone.v2) <= 1e-12)
    throw InputError("v1 = -v2 does not determine a normal cone (K and -K would meet)");
  return cone;
}

inline constexpr double kConeCoefTol = 1e-9;

/// v = a v1 + b v2 with a, b >= -1e-9 (relative to |v|).
inline bool cone_membership(const NormalCone2D& cone, const VectorN& v) {
  if (v.dim() != 2) throw InputError("cone membership needs a 2-dimensional vector");
  if (v.is_zero()) return true;
  const double len = euclidean_length(v);
  const double det = cross2(cone.v1, cone.v2);
  const double scale = euclidean_length(cone.v1) * euclidean_length(cone.v2);
  if (std::abs(det) <= 1e-12 * scale) {
    // half-line
    return std::abs(cross2(cone.v1, v)) <= kConeCoefTol * len * euclidean_length(cone.v1) &&
           dot(cone.v1, v) >= 0.0;
  }
  const double a = cross2(v, cone.v2) / det;
  const double b = cross2(cone.v1, v) / det;
  return a >= -kConeCoefTol * len && b >= -kConeCoefTol * len;
}

inline bool ConePair::contains(const VectorN& v) const {
  return cone_membership(cone, v) || cone_membership(cone, -v);
}

/// Boundary vectors agree as unordered sets up to a global sign, each within
/// angular distance tol.
inline bool cones_equal(const ConePair& a, const ConePair& b, double tol) {
  auto close = [tol](const VectorN& u, const VectorN& v) { return angle_between(u, v) <= tol; };
  for (double s : {1.0, -1.0}) {
    const VectorN b1 = s * b.cone.v1, b2 = s * b.cone.v2;
    if ((close(a.cone.v1, b1) && close(a.cone.v2, b2)) ||
        (close(a.cone.v1, b2) && close(a.cone.v2, b1)))
      return true;
  }
  return false;
}

inline constexpr double kAngleTol = 1e-9;
inline constexpr double kParamTol = 1e-9;
inline constexpr double kFineAngleTol = 1e-13;

namespace detail {

inline void check_plane_unit(const Norm& norm, const VectorN& x) {
  if (norm.dim() != 2) throw InputError("this construction needs a 2-dimensional norm");
  norm.require_dim(x);
  if (std::abs(norm.value(x) - 1.0) > 1e-9)
    throw InputError("x must be a unit vector (||x|| = 1)");
}

/// Shrinks [lo, hi] with pred(lo) true and pred(hi) false to width tol.
/// Returns the final (lo, hi).
template <typename Pred>
std::pair<double, double> bisect(Pred&& pred, double lo, double hi, double tol) {
  while (std::abs(hi - lo) > tol) {
    const double mid = 0.5 * (lo + hi);
    (pred(mid) ? lo : hi) = mid;
  }
  return {lo, hi};
}

inline double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * M_PI);
  return a < 0.0 ? a + 2.0 * M_PI : a;
}

} // namespace detail

/// A unit y with x Birkhoff-James orthogonal to y.
///
/// Walking the half circle from x to -x, tau_-(x, y) changes sign first and
/// tau_+(x, y) last; the directions in between are exactly the orthogonal
/// ones. The midpoint of that arc is returned, which is the unique direction
/// when x is a smooth point.
inline VectorN find_bj_direction(const Norm& norm, const VectorN& x) {
  if (norm.dim() != 2) throw InputError("find_bj_direction needs a 2-dimensional norm");
  norm.require_dim(x);
  if (x.is_zero()) throw InputError("x must be nonzero");

  const double start = polar_angle(x);
  auto tau = [&](double phi, Side side) {
    return one_sided_derivative(norm, x, sphere_point(norm, phi), side);
  };
  double a_end = 0.0, b_end = 0.0;
  auto solve = [&](double tol) {
    a_end = detail::bisect([&](double phi) { return tau(phi, Side::minus) > 0.0; }, start,
                           start + M_PI, tol).second;
    b_end = detail::bisect([&](double phi) { return tau(phi, Side::plus) >= 0.0; }, start,
                           start + M_PI, tol).first;
    return sphere_point(norm, 0.5 * (a_end + b_end));
  };
  VectorN y = solve(kAngleTol);
  // When x sits inside a flat face the distance has a kink at y, and a 1e-9
  // angle error can cost more than the orthogonality band.
  if (!is_bj_orthogonal(norm, x, y)) y = solve(kFineAngleTol);
  if (!is_bj_orthogonal(norm, x, y)) {
    std::ostringstream os;
    os << std::setprecision(17) << "find_bj_direction: tolerance exhausted, final bracket ["
       << a_end << ", " << b_end << "] rad";
    throw NumericError(os.str());
  }
  return y;
}

struct FConeResult {
  ConePair pair;
  double t1;
  double t2;
  VectorN witness_y;
};

/// F(x, eps) = K u (-K) for unit x in a 2-D norm.
///
/// With y a unit Birkhoff-James orthogonal direction, t1 is the least t in
/// [0, 1] such that x is eps-orthogonal (D sense) to (1-t)x + t y, and t2 the
/// same for -(1-t)x + t y. The eps-orthogonal set is [t_i, 1] in each case.
inline FConeResult f_cone(const Norm& norm, const VectorN& x, double eps) {
  detail::check_eps(eps);
  detail::check_plane_unit(norm, x);
  const VectorN y = find_bj_direction(norm, x);
  const double target = std::sqrt(1.0 - eps * eps);

  auto boundary = [&](double sign) {
    auto member = [&](double t) {
      return dist_to_line(norm, x, sign * (1.0 - t) * x + t * y).value >= target;
    };
    return detail::bisect([&](double t) { return !member(t); }, 0.0, 1.0, kParamTol).second;
  };
  const double t1 = boundary(1.0);
  const double t2 = boundary(-1.0);
  const VectorN v1 = normalize(norm, (1.0 - t1) * x + t1 * y);
  const VectorN v2 = normalize(norm, -(1.0 - t2) * x + t2 * y);
  return {ConePair{NormalCone2D{v1, v2}}, t1, t2, y};
}

/// Unit vectors z with inf_lambda ||x + lambda z|| = sqrt(1 - eps^2).
/// For eps > 0 these are +-v1, +-v2 of f_cone; for eps = 0 they are the
/// endpoints of the arcs of directions orthogonal to x.
inline std::vector<VectorN> s_set(const Norm& norm, const VectorN& x, double eps) {
  const FConeResult f = f_cone(norm, x, eps);
  const double target = std::sqrt(1.0 - eps * eps);
  std::vector<VectorN> out;
  for (const VectorN& v : {f.pair.cone.v1, -f.pair.cone.v1, f.pair.cone.v2, -f.pair.cone.v2}) {
    const double d = dist_to_line(norm, x, v).value;
    if (std::abs(d - target) > 1e-6) {
      std::ostringstream os;
      os << "s_set: boundary vector " << v << " has inf " << d << ", expected " << target;
      throw NumericError(os.str());
    }
    const bool duplicate = std::any_of(out.begin(), out.end(), [&](const VectorN& w) {
      return euclidean_length(w - v) <= 1e-6;
    });
    if (!duplicate) out.push_back(v);
  }
  return out;
}

/// G(x, eps) = K u (-K) for a smooth unit x in a 2-D norm.
///
/// With z the orthogonal direction of x, a unit y belongs to G(x, eps) iff
/// min_alpha ||alpha z - y|| <= eps. The members form two antipodal arcs; the
/// ends of the arc through z are found by bisection from z toward +-x.
/// v1 is the end on the side of x, v2 the end on the side of -x.
inline ConePair g_cone(const Norm& norm, const VectorN& x, double eps) {
  detail::check_eps(eps);
  detail::check_plane_unit(norm, x);
  if (!is_smooth_point(norm, x))
    throw NotSmoothError("g_cone: x is not a smooth point of the unit sphere");
  const VectorN z = find_bj_direction(norm, x);

  auto member = [&](double phi) {
    return dist_to_line(norm, sphere_point(norm, phi), z).value <= eps + kOrthTol;
  };
  const double phi_z = polar_angle(z);
  const double to_x = detail::wrap_angle(polar_angle(x) - phi_z);  // in (0, pi) or (pi, 2pi)
  const double up = to_x < M_PI ? to_x : to_x - M_PI;               // toward whichever of +-x
  const double down = M_PI - up;                                    // toward the other one
  const double end_up = detail::bisect(member, phi_z, phi_z + up, kAngleTol).first;
  const double end_down = detail::bisect(member, phi_z, phi_z - down, kAngleTol).first;
  VectorN a = sphere_point(norm, end_up);
  VectorN b = sphere_point(norm, end_down);
  // `up` heads toward x when to_x < pi
  if (to_x >= M_PI) std::swap(a, b);
  return ConePair{NormalCone2D{a, b}};
}

/// Outcome of solving F(x, eps) = K u (-K) for (x, eps).
struct ConverseResult {
  std::optional<std::pair<VectorN, double>> solution;
  bool smooth_space;
  std::string diagnostic;
};

inline constexpr int kSmoothnessSamples = 512;
inline constexpr int kConverseScan = 2048;
inline constexpr double kRoundTripTol = 1e-6;

/// True when every point of a uniform sample of the unit sphere is smooth.
inline bool sampled_smooth(const Norm& norm, int samples = kSmoothnessSamples) {
  for (int k = 0; k < samples; ++k)
    if (!is_smooth_point(norm, sphere_point(norm, 2.0 * M_PI * k / samples))) return false;
  return true;
}

/// Every (x, eps) on a 2048-angle scan of the sphere whose F(x, eps)
/// reproduces the cone within kRoundTripTol.
///
/// For v1 != v2 the candidates are the zeros of
/// h(x) = inf ||x + l v1|| - inf ||x + l v2||, with eps = sqrt(1 - d^2) at the
/// common value d. For a half-line they are the x with x orthogonal to v1,
/// with eps = 0.
inline std::vector<std::pair<VectorN, double>> converse_solutions(const Norm& norm,
                                                                  const NormalCone2D& cone) {
  if (norm.dim() != 2) throw InputError("find_x_for_cone needs a 2-dimensional norm");
  norm.require_dim(cone.v1);
  norm.require_dim(cone.v2);
  const ConePair target{cone};
  const bool half_line = angle_between(cone.v1, cone.v2) <= kAngleTol;

  auto h = [&](double phi) {
    const VectorN x = sphere_point(norm, phi);
    if (half_line) return one_sided_derivative(norm, x, cone.v1, Side::plus);
    return dist_to_line(norm, x, cone.v1).value - dist_to_line(norm, x, cone.v2).value;
  };

  std::vector<double> roots;
  const double step = 2.0 * M_PI / kConverseScan;
  double prev = h(0.0);
  for (int k = 1; k <= kConverseScan; ++k) {
    const double phi = k * step;
    const double cur = h(phi);
    if (prev == 0.0) {
      roots.push_back(phi - step);
    } else if ((prev < 0.0) != (cur < 0.0) && cur != 0.0) {
      const bool prev_neg = prev < 0.0;
      roots.push_back(detail::bisect([&](double a) { return (h(a) < 0.0) == prev_neg; },
                                     phi - step, phi, 1e-13)
                          .first);
    }
    prev = cur;
  }

  std::vector<std::pair<VectorN, double>> out;
  for (double phi : roots) {
    const VectorN x = sphere_point(norm, phi);
    double eps = 0.0;
    if (!half_line) {
      const double d =
          0.5 * (dist_to_line(norm, x, cone.v1).value + dist_to_line(norm, x, cone.v2).value);
      if (d >= 1.0 - 1e-12) continue;
      eps = std::sqrt(1.0 - d * d);
    }
    if (cones_equal(f_cone(norm, x, eps).pair, target, kRoundTripTol)) out.emplace_back(x, eps);
  }
  return out;
}

/// Some unit x and eps in [0, 1) with F(x, eps) = K u (-K), certified by
/// recomputing F. In non-smooth spaces a solution need not exist; failure is
/// reported, never guessed.
inline ConverseResult find_x_for_cone(const Norm& norm, const NormalCone2D& cone) {
  ConverseResult result{std::nullopt, sampled_smooth(norm), {}};
  auto solutions = converse_solutions(norm, cone);
  if (!solutions.empty()) {
    result.solution = std::move(solutions.front());
    return result;
  }
  std::ostringstream os;
  os << "no unit x and eps reproduce the cone " << cone.v1 << ", " << cone.v2;
  if (!result.smooth_space) os << "; the space is not smooth, so a solution need not exist";
  result.diagnostic = os.str();
  return result;
}

} // namespace bjortho

#endif // BJORTHO_CONE2D_HPP
