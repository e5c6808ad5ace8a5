#include "kernel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sfpoly::detail {

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point sub(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  Point d(a.begin(), a.end());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
  return d;
}

bool is_zero(std::span<const Rational> a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace {

ExactMatrix matrix_of(std::span<const Point> rows, std::size_t cols) {
  return ExactMatrix(std::vector<Point>(rows.begin(), rows.end()), cols);
}

std::vector<Point> differences(std::span<const Point> points) {
  std::vector<Point> d;
  for (std::size_t i = 1; i < points.size(); ++i) d.push_back(sub(points[i], points[0]));
  return d;
}

}  // namespace

std::size_t affine_dim(std::span<const Point> points) {
  if (points.size() < 2) return 0;
  const auto d = differences(points);
  return rank(matrix_of(d, points[0].size()));
}

std::vector<RawFacet> full_dim_facets(std::span<const Point> points, std::size_t dim) {
  std::map<std::pair<Point, Rational>, RawFacet> found;
  if (dim == 0) return {};
  for_each_combination(points.size(), dim, [&](std::span<const std::size_t> subset) {
    std::vector<Point> rows;
    for (std::size_t i = 1; i < subset.size(); ++i)
      rows.push_back(sub(points[subset[i]], points[subset[0]]));
    const auto kernel = nullspace(matrix_of(rows, dim));
    if (kernel.size() != 1) return true;
    Point normal = primitive(kernel.front());
    const Rational offset = dot(normal, points[subset[0]]);
    bool any_above = false;
    bool any_below = false;
    for (const auto& p : points) {
      const auto c = dot(normal, p) <=> offset;
      any_above = any_above || c > 0;
      any_below = any_below || c < 0;
      if (any_above && any_below) return true;
    }
    if (any_above) {
      for (auto& x : normal) x = -x;
    }
    const Rational off = dot(normal, points[subset[0]]);
    auto key = std::make_pair(normal, off);
    if (found.count(key)) return true;
    RawFacet f{normal, off, {}};
    for (std::size_t i = 0; i < points.size(); ++i)
      if (dot(normal, points[i]) == off) f.incident.push_back(i);
    found.emplace(std::move(key), std::move(f));
    return true;
  });
  std::vector<RawFacet> out;
  out.reserve(found.size());
  for (auto& [_, f] : found) out.push_back(std::move(f));
  return out;
}

std::vector<std::size_t> extreme_points(std::span<const Point> points) {
  // First index of every distinct point, in lexicographic order of the points.
  std::map<Point, std::size_t> distinct;
  for (std::size_t i = 0; i < points.size(); ++i) distinct.emplace(points[i], i);
  std::vector<Point> pts;
  std::vector<std::size_t> origin;
  for (const auto& [p, i] : distinct) {
    pts.push_back(p);
    origin.push_back(i);
  }
  if (pts.size() <= 1) return origin;

  // Affine coordinates on the hull: p = p0 + sum lambda_i b_i.
  const std::size_t n = pts[0].size();
  std::vector<Point> basis;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    basis.push_back(sub(pts[i], pts[0]));
    if (rank(matrix_of(basis, n)) < basis.size()) basis.pop_back();
  }
  const std::size_t k = basis.size();
  const ExactMatrix bt = matrix_of(basis, n).transpose();
  std::vector<Point> local;
  for (const auto& p : pts) local.push_back(*solve(bt, sub(p, pts[0])));

  std::vector<std::vector<Point>> active(pts.size());
  for (const auto& f : full_dim_facets(local, k))
    for (auto i : f.incident) active[i].push_back(f.normal);

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (active[i].size() >= k && rank(matrix_of(active[i], k)) == k) out.push_back(origin[i]);
  }
  return out;
}

namespace {

std::vector<Point> unique_primitive(std::span<const Point> vs) {
  std::set<Point> s;
  for (const auto& v : vs)
    if (!is_zero(v)) s.insert(primitive(v));
  return {s.begin(), s.end()};
}

std::vector<Point> primitive_basis(std::vector<std::vector<Rational>> basis) {
  for (auto& b : basis) b = primitive(b);
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace

RawCone cone_from_halfspaces(std::span<const Point> halfspaces, std::size_t dim) {
  for (const auto& h : halfspaces)
    if (h.size() != dim) throw DimensionMismatch(dim, h.size());
  RawCone cone;
  cone.dim = dim;
  const std::vector<Point> hs = unique_primitive(halfspaces);
  cone.lineality = primitive_basis(nullspace(matrix_of(hs, dim)));
  const std::size_t r = dim - cone.lineality.size();

  std::set<Point> rays;
  if (r > 0) {
    for_each_combination(hs.size(), r - 1, [&](std::span<const std::size_t> subset) {
      std::vector<Point> rows;
      for (auto i : subset) rows.push_back(hs[i]);
      for (const auto& l : cone.lineality) rows.push_back(l);
      const auto kernel = nullspace(matrix_of(rows, dim));
      if (kernel.size() != 1) return true;
      Point x = primitive(kernel.front());
      for (int flip = 0; flip < 2; ++flip) {
        const bool feasible = std::all_of(hs.begin(), hs.end(), [&](const Point& h) {
          return dot(h, x).sign() >= 0;
        });
        if (feasible) rays.insert(x);
        for (auto& c : x) c = -c;
      }
      return true;
    });
  }
  cone.rays.assign(rays.begin(), rays.end());

  std::vector<Point> gens = cone.rays;
  gens.insert(gens.end(), cone.lineality.begin(), cone.lineality.end());
  const std::size_t cone_dim = gens.empty() ? 0 : rank(matrix_of(gens, dim));
  cone.equalities = primitive_basis(nullspace(matrix_of(gens, dim)));

  std::set<std::vector<std::size_t>> seen_boundaries;
  for (const auto& h : hs) {
    std::vector<std::size_t> on;
    std::vector<Point> boundary = cone.lineality;
    bool implied_equality = true;
    for (std::size_t i = 0; i < cone.rays.size(); ++i) {
      if (dot(h, cone.rays[i]).is_zero()) {
        on.push_back(i);
        boundary.push_back(cone.rays[i]);
      } else {
        implied_equality = false;
      }
    }
    if (implied_equality || cone_dim == 0) continue;
    const std::size_t bdim = boundary.empty() ? 0 : rank(matrix_of(boundary, dim));
    if (bdim + 1 != cone_dim) continue;
    if (!seen_boundaries.insert(on).second) continue;
    cone.facets.push_back(h);
  }
  std::sort(cone.facets.begin(), cone.facets.end());
  return cone;
}

RawCone cone_from_generators(std::span<const Point> generators, std::size_t dim) {
  for (const auto& g : generators)
    if (g.size() != dim) throw DimensionMismatch(dim, g.size());
  const RawCone dual = cone_from_halfspaces(generators, dim);
  std::vector<Point> hs = dual.rays;
  for (const auto& l : dual.lineality) {
    hs.push_back(l);
    Point m = l;
    for (auto& c : m) c = -c;
    hs.push_back(std::move(m));
  }
  return cone_from_halfspaces(hs, dim);
}

}  // namespace sfpoly::detail
