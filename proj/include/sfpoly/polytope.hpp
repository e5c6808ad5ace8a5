#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sfpoly/linalg.hpp"

namespace sfpoly {

namespace detail {
struct PolytopeAccess;
}

/// Raw input points, possibly with duplicates and interior points.
template <class Tag>
struct BasicPointSet {
  std::vector<Coords<Tag>> points;
  std::size_t ambient_dim = 0;
};

/// A convex polytope in V-representation.  Vertices are exactly the extreme
/// points, sorted lexicographically, so two polytopes are equal iff their
/// vertex lists are.  Built only through `convex_hull`.
template <class Tag>
class BasicPolytope {
 public:
  using Point = Coords<Tag>;
  using Direction = Coords<DualTag<Tag>>;

  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_.at(i); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == ambient_dim_; }

  friend bool operator==(const BasicPolytope&, const BasicPolytope&) = default;

 private:
  friend struct detail::PolytopeAccess;

  std::vector<Point> vertices_;
  std::size_t ambient_dim_ = 0;
  std::size_t affine_dim_ = 0;
};

/// Supporting hyperplane of a facet, maximization convention:
/// <v, outward_normal> == offset on incident vertices and < offset elsewhere.
/// The minimizing hyperplane H_alpha is recovered by negating the normal.
template <class Tag>
struct BasicFacet {
  Coords<DualTag<Tag>> outward_normal;  // primitive integer entries
  Rational offset;
  std::vector<std::size_t> incident_vertex_indices;  // sorted

  friend bool operator==(const BasicFacet&, const BasicFacet&) = default;
};

/// A face: the vertices attaining the optimum of a linear functional.
struct Face {
  std::vector<std::size_t> vertex_indices;  // sorted, into the parent polytope
  std::size_t dim = 0;

  friend bool operator==(const Face&, const Face&) = default;
};

enum class Sense { minimize, maximize };

using PointSet = BasicPointSet<CohomologyTag>;
using Polytope = BasicPolytope<CohomologyTag>;
using FacetDescription = BasicFacet<CohomologyTag>;

/// Convex hull; throws EmptyInput on no points and DimensionMismatch on ragged input.
template <class Tag>
BasicPolytope<Tag> convex_hull(const BasicPointSet<Tag>& ps);

/// Complete, duplicate-free facet list sorted by outward normal.  Throws
/// NotFullDimensional (carrying affine_dim) for lower-dimensional polytopes.
template <class Tag>
std::vector<BasicFacet<Tag>> facets(const BasicPolytope<Tag>& p);

/// Arithmetic mean of the vertex list.
template <class Tag>
Coords<Tag> vertex_centroid(const BasicPolytope<Tag>& p);

template <class Tag>
BasicPolytope<Tag> translate(const BasicPolytope<Tag>& p, const Coords<Tag>& w);

/// Vertices optimizing <., a>.  a = 0 selects the whole polytope.
template <class Tag>
Face face_in_direction(const BasicPolytope<Tag>& p, const Coords<DualTag<Tag>>& a, Sense sense);

/// translate(p, -vertex_centroid(p)).
template <class Tag>
BasicPolytope<Tag> centered(const BasicPolytope<Tag>& p);

/// Convenience: hull of a list of points of equal dimension.
template <class Tag>
BasicPolytope<Tag> convex_hull(const std::vector<Coords<Tag>>& points) {
  return convex_hull(BasicPointSet<Tag>{points, points.empty() ? 0 : points.front().dim()});
}

/// SFH rank at a lattice point: its rank, and whether the group is exactly Z.
struct RankDescriptor {
  unsigned long rank = 0;
  bool is_exactly_z = false;

  friend bool operator==(const RankDescriptor&, const RankDescriptor&) = default;
};

/// Support of a graded group with rank labels.  Points with rank zero are
/// not in the support and are never stored.
class LabeledSupport {
 public:
  LabeledSupport() = default;
  /// Throws DomainError on rank 0, on is_exactly_z with rank != 1, or on a dimension change.
  void insert(const ExactCovector& point, RankDescriptor rank);

  const std::map<ExactCovector, RankDescriptor>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  /// Rank descriptor at `point`, or rank 0 when absent.
  RankDescriptor at(const ExactCovector& point) const;
  std::vector<ExactCovector> points() const;

  /// Set when the data contradicts the hypothesis used to produce the labels
  /// (for instance an L-space reading with a coefficient of magnitude > 1).
  bool warning = false;
  std::string warning_message;

  friend bool operator==(const LabeledSupport& a, const LabeledSupport& b) {
    return a.entries_ == b.entries_ && a.warning == b.warning;
  }

 private:
  std::map<ExactCovector, RankDescriptor> entries_;
};

}  // namespace sfpoly
