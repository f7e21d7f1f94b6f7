#ifndef BJORTHO_ORACLE_HPP
#define BJORTHO_ORACLE_HPP

// Brute-force ground truth. The brute_force_* routines never touch the
// golden-section kernel: line minima and ratio suprema come from dense lambda
// grids. Sphere scans evaluate the pointwise predicates at dense angles.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <ostream>
#include <utility>
#include <vector>

#include "error.hpp"
#include "norm.hpp"
#include "ortho.hpp"
#include "vector.hpp"

namespace bjortho::oracle {

inline constexpr std::size_t kDefaultGrid = 100000;
inline constexpr std::size_t kDefaultScan = 3600;

/// min of ||x + l y|| over grid_n uniform intervals of [-R, R], R = 2||x||/||y||,
/// polished by one three-point parabolic step. Never below the true inf.
inline double brute_force_min(const Norm& norm, const VectorN& x, const VectorN& y,
                              std::size_t grid_n = kDefaultGrid) {
  norm.require_dim(x);
  norm.require_dim(y);
  if (y.is_zero()) throw InputError("direction y must be nonzero");
  if (grid_n < 1000) throw InputError("brute_force_min needs at least 1000 grid intervals");
  const double nx = norm.value(x), ny = norm.value(y);
  if (nx == 0.0) return 0.0;

  std::vector<double> buf(x.dim());
  auto f = [&](double l) {
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = x[i] + l * y[i];
    return norm(buf);
  };
  const double radius = 2.0 * nx / ny;
  const double h = 2.0 * radius / static_cast<double>(grid_n);
  std::size_t best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i <= grid_n; ++i) {
    const double v = f(-radius + h * static_cast<double>(i));
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  if (best == 0 || best == grid_n) return best_val;
  const double lb = -radius + h * static_cast<double>(best);
  const double fm = f(lb - h), fp = f(lb + h);
  const double curv = fp - 2.0 * best_val + fm;
  if (curv <= 0.0) return best_val;
  const double vertex = std::clamp(lb - 0.5 * h * (fp - fm) / curv, lb - h, lb + h);
  return std::min(best_val, f(vertex));
}

/// sup over lambda != 0 of (||x||^2 - ||x + l y||^2) / (2 ||x|| |l| ||y||), clipped to
/// [0, 1], over a uniform grid of [-R, R] plus the geometric sequence +-R 2^-k
/// (k <= 26) that probes the limits at 0. Deeper probes lose more to
/// cancellation in the numerator than they gain.
inline double brute_force_B_ratio(const Norm& norm, const VectorN& x, const VectorN& y,
                                  std::size_t grid_n = kDefaultGrid) {
  norm.require_dim(x);
  norm.require_dim(y);
  if (x.is_zero() || y.is_zero()) throw InputError("x and y must be nonzero");
  const double nx = norm.value(x), ny = norm.value(y);
  std::vector<double> buf(x.dim());
  auto ratio = [&](double l) {
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = x[i] + l * y[i];
    const double v = norm(buf);
    return (nx - v) * (nx + v) / (2.0 * nx * std::abs(l) * ny);
  };
  const double radius = 2.0 * nx / ny;
  double best = 0.0;
  for (std::size_t i = 0; i <= grid_n; ++i) {
    const double l = -radius + 2.0 * radius * static_cast<double>(i) / static_cast<double>(grid_n);
    if (l != 0.0) best = std::max(best, ratio(l));
  }
  for (int k = 0; k <= 26; ++k) {
    const double l = std::ldexp(radius, -k);
    best = std::max({best, ratio(l), ratio(-l)});
  }
  return std::min(best, 1.0);
}

/// Uniform scan of the unit sphere of a 2-D norm. Index n-1 is adjacent to 0.
struct SphereScan {
  std::vector<double> angles;
  std::vector<VectorN> points;
  std::vector<bool> members;
  std::vector<double> values;  ///< inf_lambda ||x + lambda u|| at each point u

  std::size_t size() const { return angles.size(); }
  double member_fraction() const {
    return static_cast<double>(std::count(members.begin(), members.end(), true)) /
           static_cast<double>(size());
  }
};

namespace detail {

template <typename Member>
SphereScan scan(const Norm& norm, const VectorN& x, std::size_t n, Member&& member) {
  if (norm.dim() != 2) throw InputError("sphere scans need a 2-dimensional norm");
  norm.require_dim(x);
  if (n < 360) throw InputError("sphere scans need at least 360 angles");
  SphereScan s;
  s.angles.reserve(n);
  s.points.reserve(n);
  s.members.reserve(n);
  s.values.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
    VectorN u = sphere_point(norm, a);
    s.members.push_back(member(u));
    s.values.push_back(dist_to_line(norm, x, u).value);
    s.angles.push_back(a);
    s.points.push_back(std::move(u));
  }
  return s;
}

} // namespace detail

/// Pointwise F(x, eps) membership on n uniform sphere angles.
inline SphereScan scan_F(const Norm& norm, const VectorN& x, double eps,
                         std::size_t n = kDefaultScan) {
  return detail::scan(norm, x, n, [&](const VectorN& u) { return is_approx_orth_D(norm, x, u, eps); });
}

/// Pointwise G(x, eps) membership on n uniform sphere angles, straight from
/// the defining inequality.
inline SphereScan scan_G(const Norm& norm, const VectorN& x, double eps,
                         std::size_t n = kDefaultScan) {
  return detail::scan(norm, x, n, [&](const VectorN& u) { return is_approx_orth_B(norm, x, u, eps); });
}

/// Unit sphere points within distance eps of z: the closed ball around z cut
/// with the sphere.
inline std::vector<bool> scan_ball(const Norm& norm, const VectorN& z, double eps,
                                   std::size_t n = kDefaultScan) {
  std::vector<bool> members;
  members.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const VectorN w = sphere_point(norm, 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n));
    members.push_back(norm.value(z - w) <= eps);
  }
  return members;
}

struct Components {
  std::size_t count;
  /// Inclusive index ranges (first, last); a range wraps when first > last.
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

/// Maximal circular runs of true, merging the run that wraps past the end.
inline Components circular_components(const std::vector<bool>& members) {
  if (members.empty()) throw InputError("circular_components needs a nonempty list");
  const std::size_t n = members.size();
  if (std::all_of(members.begin(), members.end(), [](bool b) { return b; }))
    return {1, {{0, n - 1}}};
  // start right after some false entry so no run is split by the wrap
  std::size_t origin = 0;
  while (members[origin]) ++origin;
  Components out{0, {}};
  bool in_run = false;
  std::size_t first = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    const std::size_t i = (origin + step) % n;
    if (members[i] && !in_run) {
      in_run = true;
      first = i;
    } else if (!members[i] && in_run) {
      in_run = false;
      out.arcs.emplace_back(first, (i + n - 1) % n);
    }
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  out.count = out.arcs.size();
  return out;
}

/// CSV dump of a pair of scans over the same angles.
inline void write_scan_csv(std::ostream& os, const SphereScan& f, const SphereScan& g) {
  if (f.size() != g.size()) throw InputError("scans have different resolutions");
  const auto old_precision = os.precision(17);
  os << "angle_radians,unit_x,unit_y,inf_value,member_F,member_G\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    os << f.angles[i] << ',' << f.points[i][0] << ',' << f.points[i][1] << ',' << f.values[i]
       << ',' << (f.members[i] ? 1 : 0) << ',' << (g.members[i] ? 1 : 0) << '\n';
  }
  os.precision(old_precision);
}

} // namespace bjortho::oracle

#endif // BJORTHO_ORACLE_HPP
