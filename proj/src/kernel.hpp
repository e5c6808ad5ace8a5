#pragma once

// Coordinate-free geometry on raw rational tuples.  The typed polytope and
// cone modules are thin layers over these routines.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sfpoly/linalg.hpp"

namespace sfpoly::detail {

using Point = std::vector<Rational>;

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Point sub(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> a);

/// Calls `visit` with every k-subset of {0..n-1} in lexicographic order.
/// Stops early when `visit` returns false.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(std::span<const std::size_t>)>& visit);

/// Dimension of the affine hull; empty input gives 0.
std::size_t affine_dim(std::span<const Point> points);

struct RawFacet {
  Point normal;  // primitive, outward: <normal, p> <= offset on all points
  Rational offset;
  std::vector<std::size_t> incident;  // sorted indices of points attaining the offset
};

/// Facets of the hull of `points`, which must span R^dim affinely.  Brute force
/// over dim-subsets; deterministic order (sorted by normal, then offset).
std::vector<RawFacet> full_dim_facets(std::span<const Point> points, std::size_t dim);

/// Indices (into `points`) of the extreme points of their convex hull, sorted by
/// point lexicographically, one index per distinct extreme point.
std::vector<std::size_t> extreme_points(std::span<const Point> points);

/// Closed polyhedral cone in both representations.  `rays` and `lineality`
/// generate the cone; `facets` and `equalities` (each used as h and -h) cut it out.
struct RawCone {
  std::size_t dim = 0;
  std::vector<Point> rays;        // primitive, sorted, pointed part
  std::vector<Point> lineality;   // primitive basis of the lineality space
  std::vector<Point> facets;      // primitive inward normals: <h, x> >= 0
  std::vector<Point> equalities;  // primitive basis of the annihilator of span(cone)
};

/// {x in R^dim : <h, x> >= 0 for all h}.
RawCone cone_from_halfspaces(std::span<const Point> halfspaces, std::size_t dim);

/// Conic hull of `generators` in R^dim.
RawCone cone_from_generators(std::span<const Point> generators, std::size_t dim);

}  // namespace sfpoly::detail
