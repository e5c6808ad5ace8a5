#include "sfpoly/polytope.hpp"

#include <algorithm>

#include "kernel.hpp"

namespace sfpoly {

namespace detail {

struct PolytopeAccess {
  template <class Tag>
  static BasicPolytope<Tag> make(std::vector<Coords<Tag>> sorted_vertices, std::size_t ambient,
                                 std::size_t affine) {
    BasicPolytope<Tag> p;
    p.vertices_ = std::move(sorted_vertices);
    p.ambient_dim_ = ambient;
    p.affine_dim_ = affine;
    return p;
  }
};

}  // namespace detail

namespace {

template <class Tag>
std::vector<detail::Point> raw(const std::vector<Coords<Tag>>& pts) {
  std::vector<detail::Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(p.coords());
  return out;
}

}  // namespace

template <class Tag>
BasicPolytope<Tag> convex_hull(const BasicPointSet<Tag>& ps) {
  if (ps.points.empty()) throw EmptyInput("convex hull of an empty point set");
  for (const auto& p : ps.points)
    if (p.dim() != ps.ambient_dim) throw DimensionMismatch(ps.ambient_dim, p.dim());
  const auto pts = raw(ps.points);
  std::vector<Coords<Tag>> verts;
  for (auto i : detail::extreme_points(pts)) verts.push_back(ps.points[i]);
  std::sort(verts.begin(), verts.end());
  const std::size_t affine = detail::affine_dim(raw(verts));
  return detail::PolytopeAccess::make(std::move(verts), ps.ambient_dim, affine);
}

template <class Tag>
std::vector<BasicFacet<Tag>> facets(const BasicPolytope<Tag>& p) {
  if (!p.full_dimensional()) throw NotFullDimensional(p.affine_dim(), p.ambient_dim());
  std::vector<BasicFacet<Tag>> out;
  for (auto& f : detail::full_dim_facets(raw(p.vertices()), p.ambient_dim())) {
    out.push_back(BasicFacet<Tag>{Coords<DualTag<Tag>>(std::move(f.normal)), std::move(f.offset),
                                  std::move(f.incident)});
  }
  return out;
}

template <class Tag>
Coords<Tag> vertex_centroid(const BasicPolytope<Tag>& p) {
  auto sum = Coords<Tag>::zero(p.ambient_dim());
  for (const auto& v : p.vertices()) sum += v;
  return sum * Rational(BigInt(1), BigInt(static_cast<unsigned long>(p.vertex_count())));
}

template <class Tag>
BasicPolytope<Tag> translate(const BasicPolytope<Tag>& p, const Coords<Tag>& w) {
  if (w.dim() != p.ambient_dim()) throw DimensionMismatch(p.ambient_dim(), w.dim());
  std::vector<Coords<Tag>> verts;
  verts.reserve(p.vertex_count());
  // A common shift preserves lexicographic order.
  for (const auto& v : p.vertices()) verts.push_back(v + w);
  return detail::PolytopeAccess::make(std::move(verts), p.ambient_dim(), p.affine_dim());
}

template <class Tag>
Face face_in_direction(const BasicPolytope<Tag>& p, const Coords<DualTag<Tag>>& a, Sense sense) {
  if (a.dim() != p.ambient_dim()) throw DimensionMismatch(p.ambient_dim(), a.dim());
  Face face;
  std::optional<Rational> best;
  for (std::size_t i = 0; i < p.vertex_count(); ++i) {
    const Rational v = evaluate(a, p.vertex(i));
    const bool better = !best || (sense == Sense::maximize ? v > *best : v < *best);
    if (better) {
      best = v;
      face.vertex_indices.assign(1, i);
    } else if (v == *best) {
      face.vertex_indices.push_back(i);
    }
  }
  std::vector<detail::Point> pts;
  for (auto i : face.vertex_indices) pts.push_back(p.vertex(i).coords());
  face.dim = detail::affine_dim(pts);
  return face;
}

template <class Tag>
BasicPolytope<Tag> centered(const BasicPolytope<Tag>& p) {
  return translate(p, -vertex_centroid(p));
}

#define SFPOLY_INSTANTIATE(Tag)                                                                 \
  template BasicPolytope<Tag> convex_hull(const BasicPointSet<Tag>&);                          \
  template std::vector<BasicFacet<Tag>> facets(const BasicPolytope<Tag>&);                     \
  template Coords<Tag> vertex_centroid(const BasicPolytope<Tag>&);                             \
  template BasicPolytope<Tag> translate(const BasicPolytope<Tag>&, const Coords<Tag>&);        \
  template Face face_in_direction(const BasicPolytope<Tag>&, const Coords<DualTag<Tag>>&, Sense); \
  template BasicPolytope<Tag> centered(const BasicPolytope<Tag>&);

SFPOLY_INSTANTIATE(CohomologyTag)
SFPOLY_INSTANTIATE(HomologyTag)

#undef SFPOLY_INSTANTIATE

void LabeledSupport::insert(const ExactCovector& point, RankDescriptor rank) {
  if (rank.rank == 0) throw DomainError("labeled support entries must have nonzero rank");
  if (rank.is_exactly_z && rank.rank != 1) throw DomainError("a group isomorphic to Z has rank 1");
  if (!entries_.empty() && entries_.begin()->first.dim() != point.dim())
    throw DimensionMismatch(entries_.begin()->first.dim(), point.dim());
  entries_[point] = rank;
}

RankDescriptor LabeledSupport::at(const ExactCovector& point) const {
  auto it = entries_.find(point);
  return it == entries_.end() ? RankDescriptor{} : it->second;
}

std::vector<ExactCovector> LabeledSupport::points() const {
  std::vector<ExactCovector> out;
  for (const auto& [p, _] : entries_) out.push_back(p);
  return out;
}

}  // namespace sfpoly
