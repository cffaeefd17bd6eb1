#pragma once

// SVG picture of a two-dimensional twisted cube: density +1 regions filled,
// density -1 regions hatched, boundary segments not in C dashed, lattice
// points as dots (solid for +1, hollow for -1). 1 unit = 40 px.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "twistcube/errors.hpp"
#include "twistcube/limits.hpp"
#include "twistcube/twistedcube.hpp"
#include "twistcube/weightword.hpp"

namespace twistcube {

namespace detail {

struct Vec2 {
  double x1;
  double x2;
};

struct RenderEdge {
  Vec2 a;
  Vec2 b;
  bool included;
};

struct RenderRegion {
  std::vector<Vec2> corners;
  std::vector<RenderEdge> edges;
  int rho;
};

inline std::string fmt_num(double v) {
  if (std::fabs(v) < 5e-7) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

inline double polygon_area(const std::vector<Vec2>& p) {
  double a = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec2& u = p[i];
    const Vec2& v = p[(i + 1) % p.size()];
    a += u.x1 * v.x2 - v.x1 * u.x2;
  }
  return std::fabs(a) / 2;
}

// The cube in the plane splits along the x2-band into the part with
// x1 between 0 and L(x2) = ell_1 - c x2 where L >= 0 (closed in x1) and the
// part strictly between L(x2) and 0 where L < 0.
inline std::vector<RenderRegion> plane_regions(const TwistData& d) {
  const double ell1 = static_cast<double>(d.ell(1));
  const double ell2 = static_cast<double>(d.ell(2));
  const double c = static_cast<double>(d.c(1, 2));
  const bool band_closed = d.ell(2) >= 0;
  const double lo = std::min(0.0, ell2);
  const double hi = std::max(0.0, ell2);
  auto L = [&](double x2) { return ell1 - c * x2; };
  // rho = sgn(x1) sgn(x2) for n = 2, with sgn(t) = +1 iff t < 0
  const int sgn2 = band_closed ? -1 : 1;

  std::vector<RenderRegion> out;
  for (bool nonneg : {true, false}) {
    double a = lo;
    double b = hi;
    if (c != 0) {
      const double root = ell1 / c;
      // L is decreasing in x2 when c > 0
      const bool below = (c > 0) == nonneg;  // the L >= 0 (or < 0) side is x2 <= root
      if (below) {
        b = std::min(b, root);
      } else {
        a = std::max(a, root);
      }
    } else if ((ell1 >= 0) != nonneg) {
      continue;
    }
    if (a > b) continue;
    RenderRegion r;
    r.rho = (nonneg ? -1 : 1) * sgn2;
    const Vec2 p0{0, a}, p1{L(a), a}, p2{L(b), b}, p3{0, b};
    for (const Vec2& v : {p0, p1, p2, p3}) {
      if (r.corners.empty() || std::fabs(r.corners.back().x1 - v.x1) > 1e-9 || std::fabs(r.corners.back().x2 - v.x2) > 1e-9) {
        r.corners.push_back(v);
      }
    }
    const bool horizontal = band_closed;
    r.edges = {{p0, p1, horizontal}, {p1, p2, nonneg}, {p2, p3, horizontal}, {p3, p0, nonneg}};
    if (polygon_area(r.corners) > 1e-9) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

/// Standalone SVG document for a cube with n = 2; throws DimensionMismatch
/// otherwise.
inline std::string render_svg(const TwistData& d, const Limits& limits = {}) {
  if (d.size() != 2) {
    throw DimensionMismatch("rendering needs n = 2, got n = " + std::to_string(d.size()));
  }
  using detail::fmt_num;
  using detail::Vec2;
  constexpr double unit = 40.0;

  const LatticeCensus census = lattice_points(d, limits);
  const std::vector<detail::RenderRegion> regions = detail::plane_regions(d);

  double min1 = 0, max1 = 0, min2 = 0, max2 = 0;
  auto grow = [&](double x1, double x2) {
    min1 = std::min(min1, x1);
    max1 = std::max(max1, x1);
    min2 = std::min(min2, x2);
    max2 = std::max(max2, x2);
  };
  for (const auto& p : census.points) grow(static_cast<double>(p.x[0]), static_cast<double>(p.x[1]));
  for (const auto& r : regions) {
    for (const auto& v : r.corners) grow(v.x1, v.x2);
  }
  min1 -= 1;
  max1 += 1;
  min2 -= 1;
  max2 += 1;
  const double width = (max1 - min1) * unit;
  const double height = (max2 - min2) * unit;
  auto px = [&](double x1) { return fmt_num((x1 - min1) * unit); };
  auto py = [&](double x2) { return fmt_num((max2 - x2) * unit); };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_num(width) + "\" height=\"" + fmt_num(height) +
       "\" viewBox=\"0 0 " + fmt_num(width) + " " + fmt_num(height) + "\">\n";
  s += "<defs><pattern id=\"hatch\" width=\"8\" height=\"8\" patternUnits=\"userSpaceOnUse\" "
       "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" stroke=\"#555\" "
       "stroke-width=\"1.5\"/></pattern></defs>\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes
  s += "<line x1=\"" + px(min1) + "\" y1=\"" + py(0) + "\" x2=\"" + px(max1) + "\" y2=\"" + py(0) +
       "\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
  s += "<line x1=\"" + px(0) + "\" y1=\"" + py(min2) + "\" x2=\"" + px(0) + "\" y2=\"" + py(max2) +
       "\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";

  for (const auto& r : regions) {
    std::string pts;
    for (const Vec2& v : r.corners) {
      if (!pts.empty()) pts += ' ';
      pts += px(v.x1) + "," + py(v.x2);
    }
    const char* fill = r.rho > 0 ? "#9ecae1" : "url(#hatch)";
    s += "<polygon points=\"" + pts + "\" fill=\"" + fill + "\" stroke=\"none\" data-rho=\"" +
         (r.rho > 0 ? "+1" : "-1") + "\"/>\n";
    for (const auto& e : r.edges) {
      if (std::fabs(e.a.x1 - e.b.x1) < 1e-9 && std::fabs(e.a.x2 - e.b.x2) < 1e-9) continue;
      s += "<line x1=\"" + px(e.a.x1) + "\" y1=\"" + py(e.a.x2) + "\" x2=\"" + px(e.b.x1) + "\" y2=\"" + py(e.b.x2) +
           "\" stroke=\"black\" stroke-width=\"2\"";
      if (!e.included) s += " stroke-dasharray=\"6 4\"";
      s += "/>\n";
    }
    double cx = 0, cy = 0;
    for (const Vec2& v : r.corners) {
      cx += v.x1 / static_cast<double>(r.corners.size());
      cy += v.x2 / static_cast<double>(r.corners.size());
    }
    s += "<text x=\"" + px(cx) + "\" y=\"" + py(cy) +
         "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" + (r.rho > 0 ? "+1" : "-1") +
         "</text>\n";
  }

  for (const auto& p : census.points) {
    const double x1 = static_cast<double>(p.x[0]);
    const double x2 = static_cast<double>(p.x[1]);
    s += "<circle cx=\"" + px(x1) + "\" cy=\"" + py(x2) + "\" r=\"4\" ";
    s += p.rho > 0 ? "fill=\"black\"" : "fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"";
    s += " data-x=\"" + std::to_string(p.x[0]) + "," + std::to_string(p.x[1]) + "\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace twistcube
