#ifndef BJORTHO_CLI_HPP
#define BJORTHO_CLI_HPP

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cone2d.hpp"
#include "error.hpp"
#include "norm.hpp"
#include "norm_json.hpp"
#include "oracle.hpp"
#include "ortho.hpp"
#include "vector.hpp"

namespace bjortho::cli {

// Exit codes shared by every subcommand.
inline constexpr int kHolds = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kFails = 2;
inline constexpr int kNoSolution = 3;

inline constexpr int kSvgSpherePoints = 720;
inline constexpr int kCsvSpherePoints = 720;

/// "a,b,c" -> VectorN. Plain decimals only.
inline VectorN parse_vector(const std::string& text) {
  std::vector<double> coords;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto first = tok.find_first_not_of(" \t");
    const auto last = tok.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("malformed vector \"" + text + "\"");
    tok = tok.substr(first, last - first + 1);
    double v = 0.0;
    const char* begin = tok.data();
    if (!tok.empty() && tok[0] == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v))
      throw InputError("malformed vector \"" + text + "\"");
    coords.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return VectorN(std::move(coords));
}

inline std::string format_vector(const VectorN& v) {
  std::ostringstream os;
  os << std::setprecision(12);
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

inline std::string format_number(double d) {
  std::ostringstream os;
  os << std::setprecision(12) << d;
  return os.str();
}

inline void print_report(std::ostream& out, const OrthReport& r) {
  out << "bj: " << std::boolalpha << r.bj << '\n'
      << "in_plus: " << r.in_plus << '\n'
      << "in_minus: " << r.in_minus << '\n'
      << "eps_D_min: " << format_number(r.eps_D_min) << '\n'
      << "eps_B_min: " << format_number(r.eps_B_min) << '\n'
      << "degenerate: " << r.degenerate << '\n'
      << std::noboolalpha;
}

/// Points of the arc K n S from v1 to v2.
inline std::vector<VectorN> cone_arc(const Norm& norm, const NormalCone2D& cone, int n = 64) {
  std::vector<VectorN> pts;
  for (int i = 0; i <= n; ++i) {
    const double s = static_cast<double>(i) / n;
    const VectorN p = (1.0 - s) * cone.v1 + s * cone.v2;
    pts.push_back(p.is_zero() ? cone.v1 : normalize(norm, p));
  }
  return pts;
}

/// SVG 1.1 picture of the unit sphere, the vector x and the arcs of K u (-K).
inline void write_cone_svg(std::ostream& os, const Norm& norm, const VectorN& x,
                           const ConePair& pair) {
  std::vector<VectorN> sphere;
  double extent = 0.0;
  for (int k = 0; k < kSvgSpherePoints; ++k) {
    sphere.push_back(sphere_point(norm, 2.0 * M_PI * k / kSvgSpherePoints));
    extent = std::max(extent, euclidean_length(sphere.back()));
  }
  const double size = 400.0, margin = 20.0;
  const double scale = (size / 2.0 - margin) / extent;
  auto px = [&](const VectorN& v) {
    std::ostringstream p;
    p << std::fixed << std::setprecision(3) << size / 2.0 + scale * v[0] << ','
      << size / 2.0 - scale * v[1];
    return p.str();
  };
  auto polyline = [&](const std::vector<VectorN>& pts, const char* stroke, double width,
                      bool closed) {
    os << "  <" << (closed ? "polygon" : "polyline") << " fill=\"none\" stroke=\"" << stroke
       << "\" stroke-width=\"" << width << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << px(pts[i]);
    os << "\"/>\n";
  };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
     << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  polyline(sphere, "#555555", 1.0, true);
  const VectorN origin = VectorN::zero(2);
  const VectorN xu = normalize(norm, x);
  polyline({origin, xu}, "#1f77b4", 2.0, false);
  const std::vector<VectorN> arc = cone_arc(norm, pair.cone);
  std::vector<VectorN> neg;
  for (const auto& p : arc) neg.push_back(-p);
  polyline(arc, "#d62728", 4.0, false);
  polyline(neg, "#d62728", 4.0, false);
  os << "</svg>\n";
}

inline void write_cone_csv(std::ostream& os, const Norm& norm, const ConePair& pair) {
  const auto old_precision = os.precision(17);
  os << "angle_radians,unit_x,unit_y,in_cone\n";
  for (int k = 0; k < kCsvSpherePoints; ++k) {
    const double a = 2.0 * M_PI * k / kCsvSpherePoints;
    const VectorN u = sphere_point(norm, a);
    os << a << ',' << u[0] << ',' << u[1] << ',' << (pair.contains(u) ? 1 : 0) << '\n';
  }
  os.precision(old_precision);
}

inline void write_file(const std::string& path, auto&& writer) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  writer(f);
  if (!f) throw InputError("failed writing " + path);
}

namespace detail {

inline std::string one_line(std::string msg) {
  for (char& c : msg)
    if (c == '\n' || c == '\r') c = ' ';
  return msg;
}

inline VectorN require_2d_nonzero(const Norm& norm, const VectorN& v, const char* what) {
  norm.require_dim(v);
  if (norm.dim() != 2) throw InputError(std::string(what) + " needs a 2-dimensional norm");
  if (v.is_zero()) throw InputError(std::string(what) + ": vector must be nonzero");
  return v;
}

} // namespace detail

/// Runs one command line. Output goes to out, diagnostics to err.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Birkhoff-James orthogonality, approximate orthogonality and normal cones"};
  app.require_subcommand(1);

  std::string norm_path, x_text, y_text, v1_text, v2_text, kind, svg_path, csv_path, out_path;
  double eps = 0.0;
  std::size_t n = oracle::kDefaultScan;

  auto add_norm = [&](CLI::App* s) {
    s->add_option("--norm", norm_path, "norm spec JSON file")->required();
  };
  auto add_eps = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--eps", eps, "approximation parameter in [0,1)");
    if (required) o->required();
  };

  auto* check = app.add_subcommand("check", "orthogonality report; exit 0 if the relation holds, 2 if not");
  add_norm(check);
  check->add_option("--x", x_text, "vector x, comma separated")->required();
  check->add_option("--y", y_text, "vector y, comma separated")->required();
  add_eps(check, false);
  check->add_option("--kind", kind, "D or B (default: exact Birkhoff-James)")
      ->check(CLI::IsMember({"D", "B"}));

  auto* report = app.add_subcommand("report", "full orthogonality profile of (x, y)");
  add_norm(report);
  report->add_option("--x", x_text)->required();
  report->add_option("--y", y_text)->required();

  auto* cone_f = app.add_subcommand("cone-f", "boundary of F(x, eps) = K u -K");
  auto* cone_g = app.add_subcommand("cone-g", "boundary of G(x, eps) = K u -K (smooth x)");
  for (auto* s : {cone_f, cone_g}) {
    add_norm(s);
    s->add_option("--x", x_text)->required();
    add_eps(s, true);
    s->add_option("--svg", svg_path, "write an SVG picture");
    s->add_option("--csv", csv_path, "write a CSV of the unit sphere with cone membership");
  }

  auto* s_set_cmd = app.add_subcommand("s-set", "unit z with inf ||x + l z|| = sqrt(1 - eps^2)");
  add_norm(s_set_cmd);
  s_set_cmd->add_option("--x", x_text)->required();
  add_eps(s_set_cmd, true);

  auto* find_x = app.add_subcommand("find-x", "solve F(x, eps) = K u -K for the cone of v1, v2");
  add_norm(find_x);
  find_x->add_option("--v1", v1_text)->required();
  find_x->add_option("--v2", v2_text)->required();

  auto* scan = app.add_subcommand("scan", "sphere scan of F and G membership as CSV");
  add_norm(scan);
  scan->add_option("--x", x_text)->required();
  add_eps(scan, true);
  scan->add_option("--n", n, "number of angles (>= 360)");
  scan->add_option("--out", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << detail::one_line(e.what()) << '\n';
    return kUsageError;
  }

  try {
    const Norm norm = norm_from_file(norm_path);
    if (!(eps >= 0.0 && eps < 1.0)) throw InputError("eps must lie in [0, 1)");

    if (check->parsed() || report->parsed()) {
      const VectorN x = parse_vector(x_text), y = parse_vector(y_text);
      norm.require_dim(x);
      norm.require_dim(y);
      if (x.is_zero()) throw InputError("x must be nonzero");
      out << "norm: " << norm.describe() << '\n'
          << "x: " << format_vector(x) << '\n'
          << "y: " << format_vector(y) << '\n';
      print_report(out, orth_report(norm, x, y));
      if (report->parsed()) return kHolds;
      bool holds = false;
      if (kind == "D") {
        holds = is_approx_orth_D(norm, x, y, eps);
        out << "relation: D eps=" << format_number(eps) << '\n';
      } else if (kind == "B") {
        holds = is_approx_orth_B(norm, x, y, eps);
        out << "relation: B eps=" << format_number(eps) << '\n';
      } else {
        holds = is_bj_orthogonal(norm, x, y);
        out << "relation: BJ\n";
      }
      out << "holds: " << (holds ? "true" : "false") << '\n';
      return holds ? kHolds : kFails;
    }

    if (cone_f->parsed() || cone_g->parsed()) {
      const VectorN x = normalize(norm, detail::require_2d_nonzero(norm, parse_vector(x_text), "cone"));
      ConePair pair{NormalCone2D{x, x}};
      out << "x: " << format_vector(x) << '\n' << "eps: " << format_number(eps) << '\n';
      if (cone_f->parsed()) {
        const FConeResult f = f_cone(norm, x, eps);
        pair = f.pair;
        out << "v1: " << format_vector(pair.cone.v1) << '\n'
            << "v2: " << format_vector(pair.cone.v2) << '\n'
            << "t1: " << format_number(f.t1) << '\n'
            << "t2: " << format_number(f.t2) << '\n'
            << "witness_y: " << format_vector(f.witness_y) << '\n';
      } else {
        pair = g_cone(norm, x, eps);
        out << "v1: " << format_vector(pair.cone.v1) << '\n'
            << "v2: " << format_vector(pair.cone.v2) << '\n';
      }
      if (!svg_path.empty())
        write_file(svg_path, [&](std::ostream& f) { write_cone_svg(f, norm, x, pair); });
      if (!csv_path.empty())
        write_file(csv_path, [&](std::ostream& f) { write_cone_csv(f, norm, pair); });
      return kHolds;
    }

    if (s_set_cmd->parsed()) {
      const VectorN x = normalize(norm, detail::require_2d_nonzero(norm, parse_vector(x_text), "s-set"));
      out << "x: " << format_vector(x) << '\n' << "eps: " << format_number(eps) << '\n';
      for (const VectorN& z : s_set(norm, x, eps)) out << "z: " << format_vector(z) << '\n';
      return kHolds;
    }

    if (find_x->parsed()) {
      const VectorN a = detail::require_2d_nonzero(norm, parse_vector(v1_text), "find-x");
      const VectorN b = detail::require_2d_nonzero(norm, parse_vector(v2_text), "find-x");
      const NormalCone2D cone = make_cone(norm, a, b);
      const ConverseResult r = find_x_for_cone(norm, cone);
      out << "v1: " << format_vector(cone.v1) << '\n' << "v2: " << format_vector(cone.v2) << '\n';
      if (!r.solution) {
        out << "NO-SOLUTION\n" << "diagnostic: " << r.diagnostic << '\n';
        return kNoSolution;
      }
      out << "x: " << format_vector(r.solution->first) << '\n'
          << "eps: " << format_number(r.solution->second) << '\n';
      return kHolds;
    }

    if (scan->parsed()) {
      const VectorN x = detail::require_2d_nonzero(norm, parse_vector(x_text), "scan");
      const auto f = oracle::scan_F(norm, x, eps, n);
      const auto g = oracle::scan_G(norm, x, eps, n);
      if (out_path.empty()) {
        oracle::write_scan_csv(out, f, g);
      } else {
        write_file(out_path, [&](std::ostream& os) { oracle::write_scan_csv(os, f, g); });
      }
      return kHolds;
    }
  } catch (const std::exception& e) {
    err << "error: " << detail::one_line(e.what()) << '\n';
    return kUsageError;
  }
  return kUsageError;
}

} // namespace bjortho::cli

#endif // BJORTHO_CLI_HPP
