#ifndef BJORTHO_MINIMIZE_HPP
#define BJORTHO_MINIMIZE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "error.hpp"
#include "norm.hpp"
#include "vector.hpp"

namespace bjortho {

/// Minimum of a one-dimensional convex objective. Every lambda in
/// [lambda_lo, lambda_hi] attains the objective within tol of value; for
/// norms with flat faces the minimizer set is a genuine interval.
struct MinResult {
  double value;
  double lambda_lo;
  double lambda_hi;
  double tol;
};

/// Golden-section search on [a, b] until the bracket is narrower than width.
/// Returns (argmin, minimum). For a convex f the true minimizer set meets
/// the final bracket.
template <typename F>
std::pair<double, double> golden_section_min(F&& f, double a, double b, double width) {
  constexpr double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > width) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  if (fm <= fc && fm <= fd) return {m, fm};
  return fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
}

/// Default search tolerance: smooth l_p objectives converge cleanly, the
/// piecewise-linear ones get a slightly looser target.
inline double default_min_tol(const Norm& norm) { return norm.is_smooth_lp() ? 1e-10 : 1e-9; }

namespace detail {

/// lambda -> ||x + lambda y|| without allocating per call.
class LineObjective {
public:
  LineObjective(const Norm& norm, const VectorN& x, const VectorN& y)
      : norm_(norm), x_(x), y_(y), buf_(x.dim()) {}

  double operator()(double lambda) {
    for (std::size_t i = 0; i < buf_.size(); ++i) buf_[i] = x_[i] + lambda * y_[i];
    return norm_(buf_);
  }

private:
  const Norm& norm_;
  const VectorN& x_;
  const VectorN& y_;
  std::vector<double> buf_;
};

inline void check_line_inputs(const Norm& norm, const VectorN& x, const VectorN& y) {
  norm.require_dim(x);
  norm.require_dim(y);
  if (y.is_zero()) throw InputError("direction y must be nonzero (the line degenerates)");
}

// Outside [-R, R] with R = 2||x||/||y|| we have ||x + l y|| >= |l| ||y|| - ||x|| > ||x||,
// so every minimizer of the objectives below lies in this bracket.
inline double certified_radius(double nx, double ny) { return 2.0 * nx / ny; }

} // namespace detail

/// inf over lambda of ||x + lambda y||, with the interval of minimizers.
inline MinResult dist_to_line(const Norm& norm, const VectorN& x, const VectorN& y,
                              double tol = -1.0) {
  detail::check_line_inputs(norm, x, y);
  if (tol <= 0.0) tol = default_min_tol(norm);
  const double nx = norm.value(x), ny = norm.value(y);
  if (nx == 0.0) return {0.0, 0.0, 0.0, tol};

  detail::LineObjective f(norm, x, y);
  const double radius = detail::certified_radius(nx, ny);
  const double width = tol * (1.0 + radius);
  auto [arg, value] = golden_section_min(f, -radius, radius, width);
  if (nx <= value) {
    arg = 0.0;
    value = nx;
  }

  // Outward bisection to the edges of the sublevel set {f <= value + tol*||x||},
  // which is an interval by convexity. f(+-2R) >= 3||x|| lies well above it.
  const double level = value + tol * nx;
  auto edge = [&](double outer) {
    double in = arg, out = outer;
    while (std::abs(out - in) > width) {
      const double mid = 0.5 * (in + out);
      (f(mid) <= level ? in : out) = mid;
    }
    return in;
  };
  return {value, edge(-2.0 * radius), edge(2.0 * radius), tol};
}

/// inf over lambda of ||x + lambda y||^2 - ||x||^2 + 2 eps ||x|| ||y|| |lambda|.
/// The value is <= 0 (lambda = 0 gives 0); x is eps-orthogonal to y in the
/// quadratic sense exactly when it is >= 0.
inline double min_B_functional(const Norm& norm, const VectorN& x, const VectorN& y, double eps,
                               double tol = -1.0) {
  detail::check_line_inputs(norm, x, y);
  if (!(eps >= 0.0 && eps < 1.0)) throw InputError("eps must lie in [0, 1)");
  if (tol <= 0.0) tol = default_min_tol(norm);
  const double nx = norm.value(x), ny = norm.value(y);
  if (nx == 0.0) return 0.0;

  detail::LineObjective f(norm, x, y);
  const double slope = 2.0 * eps * nx * ny;
  auto g = [&](double lambda) {
    const double v = f(lambda);
    return v * v - nx * nx + slope * std::abs(lambda);
  };
  const double radius = detail::certified_radius(nx, ny);
  const auto [arg, value] = golden_section_min(g, -radius, radius, tol * (1.0 + radius));
  return std::min(0.0, value);
}

struct BRatio {
  double value;     ///< least eps in [0,1] with x eps-orthogonal to y (quadratic form)
  bool degenerate;  ///< y collinear with x
};

/// max(0, sup over lambda != 0 of (||x||^2 - ||x + lambda y||^2) / (2 ||x|| |lambda| ||y||)),
/// clipped to [0, 1].
///
/// The sup is taken over a sign-split grid on the certified bracket, a
/// golden refinement around the three best grid points, and the two limits
/// at lambda -> 0-, 0+, which equal tau_-(x,y)/||y|| and -tau_+(x,y)/||y||.
inline BRatio sup_B_ratio(const Norm& norm, const VectorN& x, const VectorN& y) {
  detail::check_line_inputs(norm, x, y);
  if (x.is_zero()) throw InputError("x must be nonzero");
  if (collinear(x, y)) return {1.0, true};

  const double nx = norm.value(x), ny = norm.value(y);
  detail::LineObjective f(norm, x, y);
  auto ratio = [&](double lambda) {
    const double v = f(lambda);
    return (nx * nx - v * v) / (2.0 * nx * std::abs(lambda) * ny);
  };

  const double radius = detail::certified_radius(nx, ny);
  constexpr int kHalf = 1024;
  const double h = radius / kHalf;
  std::vector<std::pair<double, double>> grid;  // (ratio, lambda)
  grid.reserve(2 * kHalf);
  for (int k = 1; k <= kHalf; ++k) {
    grid.emplace_back(ratio(k * h), k * h);
    grid.emplace_back(ratio(-k * h), -k * h);
  }
  std::partial_sort(grid.begin(), grid.begin() + 3, grid.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first; });

  double best = grid.front().first;
  for (int i = 0; i < 3; ++i) {
    const double lambda = grid[i].second;
    const double sign = lambda > 0.0 ? 1.0 : -1.0;
    // stay on one side of the pole at lambda = 0
    const double inner = std::max(std::abs(lambda) - h, 1e-3 * h);
    const double outer = std::abs(lambda) + h;
    auto neg_ratio = [&](double s) { return -ratio(sign * s); };
    const auto refined = golden_section_min(neg_ratio, inner, outer, 1e-9 * (1.0 + radius));
    best = std::max(best, -refined.second);
  }

  best = std::max(best, one_sided_derivative(norm, x, y, Side::minus) / ny);
  best = std::max(best, -one_sided_derivative(norm, x, y, Side::plus) / ny);
  return {std::clamp(best, 0.0, 1.0), false};
}

} // namespace bjortho

#endif // BJORTHO_MINIMIZE_HPP
