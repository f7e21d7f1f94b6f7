#ifndef BJORTHO_NORM_HPP
#define BJORTHO_NORM_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "vector.hpp"

namespace bjortho {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// l_p norm on R^dim, p in [1, inf].
struct LpNorm {
  double p;
  std::size_t dim;
};

/// Minkowski functional of a centrally symmetric convex polygon in R^2.
///
/// The polygon is stored by its edges: for an edge with outward normal n and
/// support height h = <n, a> > 0, the functional is max_e <n_e, v> / h_e.
/// Storing g_e = n_e / h_e makes evaluation a max of dot products.
class PolygonNorm {
public:
  explicit PolygonNorm(std::vector<std::array<double, 2>> vertices) {
    if (vertices.size() < 4)
      throw InputError("polygon needs at least 4 vertices (symmetric about the origin)");
    double scale = 0.0;
    for (const auto& v : vertices) {
      if (!std::isfinite(v[0]) || !std::isfinite(v[1]))
        throw InputError("polygon vertices must be finite");
      scale = std::max(scale, std::hypot(v[0], v[1]));
    }
    if (scale == 0.0) throw InputError("polygon is degenerate");
    const double sym_tol = 1e-9 * scale;
    for (const auto& v : vertices) {
      const bool has_mirror = std::any_of(vertices.begin(), vertices.end(), [&](const auto& w) {
        return std::hypot(v[0] + w[0], v[1] + w[1]) <= sym_tol;
      });
      if (!has_mirror) {
        std::ostringstream os;
        os << "polygon is not symmetric about the origin: vertex (" << v[0] << ", " << v[1]
           << ") has no mirror (" << -v[0] << ", " << -v[1] << ")";
        throw InputError(os.str());
      }
    }

    std::sort(vertices.begin(), vertices.end(), [](const auto& a, const auto& b) {
      return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
    });
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = vertices[i];
      const auto& b = vertices[(i + 1) % n];
      const auto& c = vertices[(i + 2) % n];
      const double turn = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
      if (turn < -1e-12 * scale * scale || std::hypot(b[0] - a[0], b[1] - a[1]) <= sym_tol)
        throw InputError("polygon vertices do not form a convex polygon");
      // outward normal of the CCW edge a -> b
      const double nx = b[1] - a[1], ny = a[0] - b[0];
      const double h = nx * a[0] + ny * a[1];
      if (h <= 1e-12 * scale * scale)
        throw InputError("origin is not strictly inside the polygon");
      gauges_.push_back({nx / h, ny / h});
    }
    vertices_ = std::move(vertices);
  }

  double operator()(std::span<const double> v) const {
    double r = 0.0;
    for (const auto& g : gauges_) r = std::max(r, g[0] * v[0] + g[1] * v[1]);
    return r;
  }

  /// Vertices in counter-clockwise order.
  const std::vector<std::array<double, 2>>& vertices() const { return vertices_; }

private:
  std::vector<std::array<double, 2>> vertices_;
  std::vector<std::array<double, 2>> gauges_;
};

class Norm;

/// Norm induced on the plane span{basis_x, basis_y}, in coefficient coordinates:
/// N(a, b) = ||a basis_x + b basis_y||_ambient.
struct SectionNorm {
  std::shared_ptr<const Norm> ambient;
  VectorN basis_x;
  VectorN basis_y;
};

/// A norm on R^n. Values are immutable after construction.
class Norm {
public:
  using Kind = std::variant<LpNorm, PolygonNorm, SectionNorm>;

  static Norm lp(double p, std::size_t dim) {
    if (dim == 0) throw InputError("norm dimension must be positive");
    if (!(p >= 1.0)) throw InputError("l_p norm needs p >= 1 (or p = inf)");
    return Norm(LpNorm{p, dim});
  }

  static Norm polygon(std::vector<std::array<double, 2>> vertices) {
    return Norm(PolygonNorm(std::move(vertices)));
  }

  static Norm section(const Norm& ambient, VectorN basis_x, VectorN basis_y) {
    if (basis_x.dim() != ambient.dim() || basis_y.dim() != ambient.dim())
      throw InputError("section basis dimension does not match the ambient norm");
    if (collinear(basis_x, basis_y, 1e-10))
      throw InputError("section basis vectors are linearly dependent");
    return Norm(SectionNorm{std::make_shared<const Norm>(ambient), std::move(basis_x),
                            std::move(basis_y)});
  }

  std::size_t dim() const {
    if (const auto* lp = std::get_if<LpNorm>(&kind_)) return lp->dim;
    return 2;
  }

  const Kind& kind() const { return kind_; }

  /// l_p with 1 < p < inf: differentiable away from the origin.
  bool is_smooth_lp() const {
    const auto* lp = std::get_if<LpNorm>(&kind_);
    return lp != nullptr && lp->p > 1.0 && lp->p < kInf;
  }

  /// Raw evaluation; the caller guarantees v.size() == dim().
  double operator()(std::span<const double> v) const {
    return std::visit([&](const auto& k) { return eval(k, v); }, kind_);
  }

  double value(const VectorN& v) const {
    require_dim(v);
    return (*this)(v.coords());
  }

  void require_dim(const VectorN& v) const {
    if (v.dim() != dim())
      throw InputError("dimension mismatch: norm is on R^" + std::to_string(dim()) +
                       ", vector has " + std::to_string(v.dim()) + " coordinates");
  }

  std::string describe() const {
    std::ostringstream os;
    if (const auto* lp = std::get_if<LpNorm>(&kind_)) {
      os << "l_";
      if (std::isinf(lp->p)) os << "inf";
      else os << lp->p;
      os << " on R^" << lp->dim;
    } else if (const auto* poly = std::get_if<PolygonNorm>(&kind_)) {
      os << "polygon norm with " << poly->vertices().size() << " vertices";
    } else {
      os << "plane section of " << std::get<SectionNorm>(kind_).ambient->describe();
    }
    return os.str();
  }

private:
  explicit Norm(Kind k) : kind_(std::move(k)) {}

  static double eval(const LpNorm& lp, std::span<const double> v) {
    if (lp.p == 1.0) {
      double s = 0.0;
      for (double c : v) s += std::abs(c);
      return s;
    }
    double m = 0.0;
    for (double c : v) m = std::max(m, std::abs(c));
    if (std::isinf(lp.p) || m == 0.0) return m;
    double s = 0.0;
    if (lp.p == 2.0) {
      for (double c : v) s += (c / m) * (c / m);
      return m * std::sqrt(s);
    }
    for (double c : v) s += std::pow(std::abs(c) / m, lp.p);
    return m * std::pow(s, 1.0 / lp.p);
  }

  static double eval(const PolygonNorm& poly, std::span<const double> v) { return poly(v); }

  static double eval(const SectionNorm& sec, std::span<const double> v) {
    const std::size_t n = sec.basis_x.dim();
    std::array<double, 16> small{};
    std::vector<double> big;
    double* w = small.data();
    if (n > small.size()) {
      big.resize(n);
      w = big.data();
    }
    for (std::size_t i = 0; i < n; ++i) w[i] = v[0] * sec.basis_x[i] + v[1] * sec.basis_y[i];
    return (*sec.ambient)(std::span<const double>(w, n));
  }

  Kind kind_;
};

inline double norm_value(const Norm& norm, const VectorN& v) { return norm.value(v); }

/// v / ||v||.
inline VectorN normalize(const Norm& norm, const VectorN& v) {
  const double n = norm.value(v);
  if (n == 0.0) throw InputError("cannot normalize the zero vector");
  return (1.0 / n) * v;
}

/// Point of the unit sphere in the direction (cos angle, sin angle).
inline VectorN sphere_point(const Norm& norm, double angle) {
  if (norm.dim() != 2) throw InputError("sphere_point needs a 2-dimensional norm");
  return normalize(norm, VectorN{std::cos(angle), std::sin(angle)});
}

enum class Side { plus, minus };

namespace detail {

// Right derivative of t -> ||x + t y|| at 0 by monotone halving of the
// difference quotient, which is nondecreasing in t for a convex function.
inline double right_derivative_by_halving(const Norm& norm, const VectorN& x, const VectorN& y) {
  const double nx = norm.value(x), ny = norm.value(y);
  if (ny == 0.0) return 0.0;
  const double step_scale = nx / ny;
  std::vector<double> buf(x.dim());
  auto quotient = [&](double t) {
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = x[i] + t * y[i];
    return (norm(buf) - nx) / t;
  };
  double t = 1e-2 * step_scale;
  double q = quotient(t);
  const double t_min = 1e-10 * step_scale;
  while (t > t_min) {
    const double q_half = quotient(t / 2.0);
    t /= 2.0;
    const bool stable = std::abs(q_half - q) < 1e-9 * ny;
    q = q_half;
    if (stable) break;
  }
  return q;
}

inline double lp_gradient_dot(const LpNorm& lp, const VectorN& x, const VectorN& y,
                              double nx) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] == 0.0) continue;
    const double g = std::pow(std::abs(x[i]) / nx, lp.p - 1.0);
    s += (x[i] > 0.0 ? g : -g) * y[i];
  }
  return s;
}

inline double right_derivative(const Norm& norm, const VectorN& x, const VectorN& y) {
  if (const auto* sec = std::get_if<SectionNorm>(&norm.kind())) {
    const VectorN ax = x[0] * sec->basis_x + x[1] * sec->basis_y;
    const VectorN ay = y[0] * sec->basis_x + y[1] * sec->basis_y;
    return right_derivative(*sec->ambient, ax, ay);
  }
  if (norm.is_smooth_lp())
    return lp_gradient_dot(std::get<LpNorm>(norm.kind()), x, y, norm.value(x));
  return right_derivative_by_halving(norm, x, y);
}

} // namespace detail

/// One-sided directional derivative of the norm at x in direction y:
/// plus -> lim_{t->0+} (||x+ty|| - ||x||)/t, minus -> the same with t->0-.
inline double one_sided_derivative(const Norm& norm, const VectorN& x, const VectorN& y,
                                   Side side) {
  norm.require_dim(x);
  norm.require_dim(y);
  if (x.is_zero()) throw InputError("one-sided derivative is undefined at the zero vector");
  if (side == Side::plus) return detail::right_derivative(norm, x, y);
  return -detail::right_derivative(norm, x, -y);
}

inline constexpr double kSmoothTol = 1e-7;

/// True when the norm has a unique supporting functional at x (2-D only):
/// the one-sided derivatives along a direction independent of x coincide.
inline bool is_smooth_point(const Norm& norm, const VectorN& x, double tol = kSmoothTol) {
  if (norm.dim() != 2) throw InputError("is_smooth_point needs a 2-dimensional norm");
  norm.require_dim(x);
  if (x.is_zero()) throw InputError("smoothness is undefined at the zero vector");
  const VectorN y = normalize(norm, VectorN{-x[1], x[0]});
  return one_sided_derivative(norm, x, y, Side::plus) -
             one_sided_derivative(norm, x, y, Side::minus) <=
         tol;
}

} // namespace bjortho

#endif // BJORTHO_NORM_HPP
