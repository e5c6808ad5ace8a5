#include "sfpoly/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "sfpoly/errors.hpp"

namespace sfpoly {

namespace {

using P2 = std::array<double, 2>;
using P3 = std::array<double, 3>;

const char* const kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

P3 lift(const std::vector<Rational>& xs) {
  P3 p{0, 0, 0};
  for (std::size_t i = 0; i < xs.size() && i < 3; ++i) p[i] = xs[i].to_double();
  return p;
}

double dot3(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

P3 cross(const P3& a, const P3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

P3 unit(const P3& a) {
  const double n = std::sqrt(dot3(a, a));
  return {a[0] / n, a[1] / n, a[2] / n};
}

// Orthographic projection onto the plane orthogonal to the viewing direction.
class Projection {
 public:
  Projection(std::size_t dim, const RenderOptions& options) {
    if (dim > 3)
      throw DomainError("render supports ambient dimension at most 3 (got " + std::to_string(dim) +
                        "); project the input to 3 or fewer coordinates first");
    if (dim < 3 || !options.along) {
      u_ = {1, 0, 0};
      w_ = {0, 1, 0};
      return;
    }
    const P3 d = *options.along;
    if (dot3(d, d) == 0) throw DomainError("projection direction must be nonzero");
    int axis = -1;
    for (int k = 0; k < 3; ++k)
      if (d[k] != 0 && d[(k + 1) % 3] == 0 && d[(k + 2) % 3] == 0) axis = k;
    if (axis >= 0) {
      // Drop that coordinate, keeping the other two in order.
      const int a = axis == 0 ? 1 : 0;
      const int b = axis == 2 ? 1 : 2;
      u_ = {0, 0, 0};
      w_ = {0, 0, 0};
      u_[a] = 1;
      w_[b] = 1;
      return;
    }
    const P3 n = unit(d);
    const P3 helper = std::abs(n[0]) < 0.9 ? P3{1, 0, 0} : P3{0, 1, 0};
    u_ = unit(cross(helper, n));
    w_ = cross(n, u_);
  }

  P2 operator()(const P3& p) const { return {dot3(p, u_), dot3(p, w_)}; }

 private:
  P3 u_{};
  P3 w_{};
};

// Maps model coordinates to the canvas with y pointing up.
class Canvas {
 public:
  Canvas(const std::vector<P2>& pts, int size) : size_(size) {
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    for (const auto& p : pts) {
      if (first) {
        lo_x = hi_x = p[0];
        lo_y = hi_y = p[1];
        first = false;
      }
      lo_x = std::min(lo_x, p[0]);
      hi_x = std::max(hi_x, p[0]);
      lo_y = std::min(lo_y, p[1]);
      hi_y = std::max(hi_y, p[1]);
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    scale_ = (size - 2.0 * kMargin) / span;
    cx_ = (lo_x + hi_x) / 2;
    cy_ = (lo_y + hi_y) / 2;
  }

  std::string x(const P2& p) const { return num(size_ / 2.0 + (p[0] - cx_) * scale_); }
  std::string y(const P2& p) const { return num(size_ / 2.0 - (p[1] - cy_) * scale_); }
  std::string xy(const P2& p) const { return x(p) + "," + y(p); }

 private:
  static constexpr double kMargin = 60;
  int size_;
  double scale_ = 1;
  double cx_ = 0;
  double cy_ = 0;
};

std::string header(int size, const std::string& title) {
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
    << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
    << "<title>" << escape(title) << "</title>\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return s.str();
}

// Cyclic order of points around their mean, in a plane spanned by e1, e2.
std::vector<std::size_t> cyclic_order(const std::vector<P3>& pts, const P3& normal) {
  P3 mean{0, 0, 0};
  for (const auto& p : pts)
    for (int k = 0; k < 3; ++k) mean[k] += p[k] / pts.size();
  P3 e1{pts[0][0] - mean[0], pts[0][1] - mean[1], pts[0][2] - mean[2]};
  if (dot3(e1, e1) == 0) e1 = {1, 0, 0};
  e1 = unit(e1);
  const P3 e2 = cross(unit(normal), e1);
  std::vector<std::pair<double, std::size_t>> keyed;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const P3 d{pts[i][0] - mean[0], pts[i][1] - mean[1], pts[i][2] - mean[2]};
    keyed.emplace_back(std::atan2(dot3(d, e2), dot3(d, e1)), i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> out;
  for (const auto& [_, i] : keyed) out.push_back(i);
  return out;
}

}  // namespace

std::string render_svg(const Polytope& p, const RenderOptions& options) {
  const std::size_t d = p.ambient_dim();
  const Projection proj(d, options);
  std::vector<P3> v3;
  std::vector<P2> v2;
  for (const auto& v : p.vertices()) {
    v3.push_back(lift(v.coords()));
    v2.push_back(proj(v3.back()));
  }
  const Canvas canvas(v2, options.size);
  std::ostringstream s;
  s << header(options.size, "polytope with " + std::to_string(p.vertex_count()) + " vertices");

  s << "<g class=\"facets\" fill=\"#4e79a7\" fill-opacity=\"0.08\" stroke=\"#1f3b5a\" stroke-width=\"1.5\">\n";
  if (p.full_dimensional() && d >= 2) {
    for (const auto& f : facets(p)) {
      std::vector<std::size_t> idx = f.incident_vertex_indices;
      std::vector<P3> pts;
      for (auto i : idx) pts.push_back(v3[i]);
      if (d == 3) {
        const auto order = cyclic_order(pts, lift(f.outward_normal.coords()));
        std::vector<std::size_t> sorted;
        for (auto k : order) sorted.push_back(idx[k]);
        idx = sorted;
      }
      s << "<polygon class=\"facet\" points=\"";
      for (std::size_t k = 0; k < idx.size(); ++k) s << (k ? " " : "") << canvas.xy(v2[idx[k]]);
      s << "\"/>\n";
    }
  } else if (p.vertex_count() == 2) {
    s << "<polyline class=\"edge\" points=\"" << canvas.xy(v2[0]) << " " << canvas.xy(v2[1])
      << "\"/>\n";
  }
  s << "</g>\n";

  s << "<g class=\"vertices\" font-family=\"monospace\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < v2.size(); ++i) {
    s << "<circle class=\"vertex\" cx=\"" << canvas.x(v2[i]) << "\" cy=\"" << canvas.y(v2[i])
      << "\" r=\"4\" fill=\"#e15759\"/>\n";
    s << "<text class=\"label\" x=\"" << canvas.x(v2[i]) << "\" y=\"" << canvas.y(v2[i])
      << "\" dx=\"6\" dy=\"-6\">" << escape(p.vertex(i).str()) << "</text>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

std::string render_svg(const DualConeSystem& sys, const RenderOptions& options) {
  const std::size_t d = sys.source.ambient_dim();
  const Projection proj(d, options);
  const auto tip = [&](const ExactVector& g) {
    P3 r = lift(g.coords());
    const double n = std::sqrt(dot3(r, r));
    for (auto& x : r) x *= options.radius / n;
    return proj(r);
  };
  std::vector<P2> extent{{0, 0}};
  for (const auto& c : sys.cones)
    for (const auto& g : c.generators()) extent.push_back(tip(g));
  for (double sx : {-1.0, 1.0})
    for (double sy : {-1.0, 1.0}) extent.push_back({sx * options.radius, sy * options.radius});
  const Canvas canvas(extent, options.size);
  const P2 origin{0, 0};

  std::ostringstream s;
  s << header(options.size, std::to_string(sys.cones.size()) + " dual cones");
  s << "<g class=\"cones\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < sys.cones.size(); ++i) {
    const auto& c = sys.cones[i];
    const char* color = kPalette[i % (sizeof kPalette / sizeof kPalette[0])];
    std::vector<P2> tips;
    for (const auto& g : c.generators()) tips.push_back(tip(g));
    // Angles measured from the mean tip keep a convex bundle contiguous.
    P2 ref{0, 0};
    for (const auto& t : tips) ref = {ref[0] + t[0], ref[1] + t[1]};
    if (ref[0] == 0 && ref[1] == 0) ref = {1, 0};
    std::vector<std::pair<double, std::size_t>> keyed;
    for (std::size_t k = 0; k < tips.size(); ++k)
      keyed.emplace_back(std::atan2(ref[0] * tips[k][1] - ref[1] * tips[k][0],
                                    ref[0] * tips[k][0] + ref[1] * tips[k][1]),
                         k);
    std::sort(keyed.begin(), keyed.end());
    s << "<g class=\"cone\" data-label=\"" << c.label() << "\" data-vertex=\""
      << escape(sys.source.vertex(c.label()).str()) << "\">\n";
    s << "<polygon class=\"cone-fill\" fill=\"" << color << "\" fill-opacity=\"0.25\" stroke=\""
      << color << "\" points=\"" << canvas.xy(origin);
    for (const auto& [_, k] : keyed) s << " " << canvas.xy(tips[k]);
    s << "\"/>\n";
    for (std::size_t k = 0; k < tips.size(); ++k)
      s << "<line class=\"ray\" x1=\"" << canvas.x(origin) << "\" y1=\"" << canvas.y(origin)
        << "\" x2=\"" << canvas.x(tips[k]) << "\" y2=\"" << canvas.y(tips[k]) << "\" stroke=\""
        << color << "\" data-ray=\"" << escape(c.generators()[k].str()) << "\"/>\n";
    s << "</g>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace sfpoly
