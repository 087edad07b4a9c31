#pragma once

// Independent geometric oracle: place the polygon's vertices back on the
// solved circle, measure closure and per-side chord errors in Cartesian
// coordinates (catching sign/branch mistakes the angle equation cannot),
// compute the shoelace area, and render an SVG picture.

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cyclorad/core.hpp"
#include "cyclorad/errors.hpp"

namespace cyclorad {

struct polygon_reconstruction {
  double radius = 0;
  std::vector<std::array<double, 2>> vertices;  // on the circle, first at angle 0
  std::vector<double> cumulative_angles;        // n+1 entries, theta_0 = 0
  double closure_error = 0;                     // |end of last side - first vertex|
  std::vector<double> side_errors;              // |chord length - l_k|
  double signed_area = 0;                       // shoelace over the vertex loop
};

namespace detail {

inline polygon_reconstruction reconstruct(const side_list& sides, double r,
                                          const std::vector<int>& steps) {
  polygon_reconstruction rec;
  rec.radius = r;
  double theta = 0;
  rec.cumulative_angles.push_back(theta);
  rec.vertices.push_back({r, 0.0});
  for (std::size_t k = 0; k < sides.size(); ++k) {
    theta += steps[k] * central_angle(sides[k], r);
    rec.cumulative_angles.push_back(theta);
    if (k + 1 < sides.size())
      rec.vertices.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  const double ex = r * std::cos(theta) - rec.vertices[0][0];
  const double ey = r * std::sin(theta) - rec.vertices[0][1];
  rec.closure_error = std::hypot(ex, ey);

  const std::size_t n = sides.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& a = rec.vertices[k];
    std::array<double, 2> b = (k + 1 < n)
                                  ? rec.vertices[k + 1]
                                  : std::array<double, 2>{r * std::cos(theta),
                                                          r * std::sin(theta)};
    rec.side_errors.push_back(std::abs(std::hypot(b[0] - a[0], b[1] - a[1]) - sides[k]));
  }

  double s = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& a = rec.vertices[k];
    const auto& b = rec.vertices[(k + 1) % n];
    s += a[0] * b[1] - b[0] * a[1];
  }
  rec.signed_area = 0.5 * s;
  return rec;
}

}  // namespace detail

/// Convex traversal: counterclockwise steps; a PNCI polygon's longest side
/// swings back so that its angle balances the sum of the others.
inline polygon_reconstruction reconstruct_vertices(const side_list& sides, double r,
                                                   const classification& cls) {
  std::vector<int> steps(sides.size(), +1);
  if (cls.kind == polygon_class::pnci) steps[cls.longest_index] = -1;
  return detail::reconstruct(sides, r, steps);
}

/// Signed traversal for crossed polygons: step sigma_k * alpha_k per side.
inline polygon_reconstruction reconstruct_vertices(const side_list& sides, double r,
                                                   const signature& sig) {
  validate_signature(sig, sides.size());
  return detail::reconstruct(sides, r, sig.signs);
}

inline double shoelace_area(const polygon_reconstruction& rec) {
  if (rec.closure_error > 1e-6 * rec.radius)
    raise(errc::not_closed, "reconstruction does not close: error " +
                                std::to_string(rec.closure_error));
  return std::abs(rec.signed_area);
}

/// Standalone SVG with the circumscribed circle, the polygon path and vertex
/// markers. Gauge-fixed reconstruction makes output byte-identical for
/// identical inputs. 512-unit viewbox, 5% margin.
inline std::string render_svg(const polygon_reconstruction& rec, double r) {
  const double view = 512.0;
  const double scale = (r > 0) ? (view * 0.45) / r : 1.0;
  const double cx = view / 2, cy = view / 2;
  auto px = [&](double x) { return cx + scale * x; };
  auto py = [&](double y) { return cy - scale * y; };

  char buf[160];
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 512 512\">\n";
  std::snprintf(buf, sizeof buf,
                "  <circle cx=\"%.6f\" cy=\"%.6f\" r=\"%.6f\" fill=\"none\" "
                "stroke=\"#888888\" stroke-width=\"1\"/>\n",
                cx, cy, scale * r);
  svg += buf;
  if (!rec.vertices.empty()) {
    svg += "  <path d=\"";
    for (std::size_t k = 0; k < rec.vertices.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%c%.6f %.6f", k == 0 ? 'M' : 'L',
                    px(rec.vertices[k][0]), py(rec.vertices[k][1]));
      svg += buf;
      if (k + 1 < rec.vertices.size()) svg += " ";
    }
    svg += " Z\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    for (const auto& v : rec.vertices) {
      std::snprintf(buf, sizeof buf,
                    "  <circle cx=\"%.6f\" cy=\"%.6f\" r=\"3\" fill=\"#cc3333\"/>\n",
                    px(v[0]), py(v[1]));
      svg += buf;
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace cyclorad
