#include "sfpoly/cones.hpp"

#include <algorithm>
#include <random>

#include "kernel.hpp"

namespace sfpoly {

namespace {

template <class Tag>
std::vector<detail::Point> raw(const std::vector<Coords<Tag>>& v) {
  std::vector<detail::Point> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.coords());
  return out;
}

template <class Tag>
std::vector<Coords<Tag>> typed(const std::vector<detail::Point>& v) {
  std::vector<Coords<Tag>> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

detail::Point negated(detail::Point p) {
  for (auto& x : p) x = -x;
  return p;
}

}  // namespace

PolyhedralCone PolyhedralCone::from_raw(const detail::RawCone& raw_cone, std::size_t label) {
  PolyhedralCone c;
  c.dim_ = raw_cone.dim;
  c.label_ = label;
  std::vector<detail::Point> gens = raw_cone.rays;
  for (const auto& l : raw_cone.lineality) {
    gens.push_back(l);
    gens.push_back(negated(l));
  }
  std::sort(gens.begin(), gens.end());
  std::vector<detail::Point> hs = raw_cone.facets;
  for (const auto& e : raw_cone.equalities) {
    hs.push_back(e);
    hs.push_back(negated(e));
  }
  std::sort(hs.begin(), hs.end());
  c.generators_ = typed<HomologyTag>(gens);
  c.halfspaces_ = typed<CohomologyTag>(hs);
  c.lineality_ = typed<HomologyTag>(raw_cone.lineality);
  return c;
}

PolyhedralCone PolyhedralCone::from_halfspaces(const std::vector<ExactCovector>& halfspaces,
                                               std::size_t dim, std::size_t label) {
  return from_raw(detail::cone_from_halfspaces(raw(halfspaces), dim), label);
}

PolyhedralCone PolyhedralCone::from_generators(const std::vector<ExactVector>& generators,
                                               std::size_t dim, std::size_t label) {
  return from_raw(detail::cone_from_generators(raw(generators), dim), label);
}

std::vector<ExactVector> extremal_rays(const PolyhedralCone& c) { return c.generators(); }

const char* to_string(Membership m) {
  switch (m) {
    case Membership::interior:
      return "interior";
    case Membership::boundary:
      return "boundary";
    case Membership::outside:
      return "outside";
  }
  return "?";
}

Membership membership(const PolyhedralCone& c, const ExactVector& a) {
  if (a.dim() != c.dim()) throw DimensionMismatch(c.dim(), a.dim());
  bool strict = true;
  for (const auto& h : c.halfspaces()) {
    const int s = pairing(h, a).sign();
    if (s < 0) return Membership::outside;
    if (s == 0) strict = false;
  }
  return strict ? Membership::interior : Membership::boundary;
}

DualConeSystem dual_cones(const Polytope& p) {
  DualConeSystem sys{{}, p};
  const std::size_t n = p.vertex_count();
  sys.cones.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<ExactCovector> hs;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) hs.push_back(p.vertex(i) - p.vertex(j));
    sys.cones.push_back(PolyhedralCone::from_halfspaces(hs, p.ambient_dim(), i));
  }
  return sys;
}

std::optional<std::size_t> extremal_vertex_for(const Polytope& p, const ExactVector& a) {
  if (a.dim() != p.ambient_dim()) throw DimensionMismatch(p.ambient_dim(), a.dim());
  std::optional<std::size_t> best;
  std::optional<Rational> best_value;
  bool tie = false;
  for (std::size_t i = 0; i < p.vertex_count(); ++i) {
    const Rational v = pairing(p.vertex(i), a);
    if (!best_value || v > *best_value) {
      best = i;
      best_value = v;
      tie = false;
    } else if (v == *best_value) {
      tie = true;
    }
  }
  if (tie) return std::nullopt;
  return best;
}

FoliationConeSet foliation_cones(const LabeledSupport& ls) {
  if (ls.empty()) throw EmptyInput("foliation cones of an empty labeled support");
  const Polytope hull = convex_hull(ls.points());
  FoliationConeSet out{{}, dual_cones(hull)};
  for (const auto& cone : out.system.cones) {
    const RankDescriptor r = ls.at(hull.vertex(cone.label()));
    if (r.rank == 1 && r.is_exactly_z) out.cones.push_back(cone);
  }
  return out;
}

namespace {

// Every wall (facet of a cone) must be a facet of exactly one other cone, with
// the opposite normal and the same rays.  Valid for pointed full-dimensional cones.
bool walls_match(const DualConeSystem& sys) {
  const auto wall_rays = [](const PolyhedralCone& c, const ExactCovector& h) {
    std::vector<ExactVector> on;
    for (const auto& g : c.generators())
      if (pairing(h, g).is_zero()) on.push_back(g);
    return on;
  };
  for (const auto& ci : sys.cones) {
    for (const auto& h : ci.halfspaces()) {
      const auto wall = wall_rays(ci, h);
      const ExactCovector opposite = -h;
      std::size_t partners = 0;
      for (const auto& cj : sys.cones) {
        if (cj.label() == ci.label()) continue;
        const auto& hs = cj.halfspaces();
        if (std::find(hs.begin(), hs.end(), opposite) == hs.end()) continue;
        if (wall_rays(cj, opposite) == wall) ++partners;
      }
      if (partners != 1) return false;
    }
  }
  return true;
}

}  // namespace

FanReport fan_check(const DualConeSystem& sys, const FanCheckOptions& options) {
  FanReport report;
  const Polytope& p = sys.source;
  const std::size_t d = p.ambient_dim();
  report.lineality = std::any_of(sys.cones.begin(), sys.cones.end(),
                                 [](const PolyhedralCone& c) { return !c.pointed(); });

  const bool single = p.vertex_count() == 1;
  bool covers = single || p.full_dimensional();
  bool disjoint = true;
  const auto add_witness = [&](const ExactVector& a) {
    if (report.witnesses.size() < options.max_witnesses) report.witnesses.push_back(a);
  };

  if (!covers) {
    // Any functional constant on the affine hull ties every vertex.
    std::vector<std::vector<Rational>> diffs;
    for (std::size_t i = 1; i < p.vertex_count(); ++i)
      diffs.push_back((p.vertex(i) - p.vertex(0)).coords());
    const auto kernel = nullspace(ExactMatrix(diffs, d));
    if (!kernel.empty()) add_witness(ExactVector(primitive(kernel.front())));
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> coord(-options.bound, options.bound);
  for (std::size_t s = 0; s < options.samples; ++s) {
    std::vector<Rational> xs;
    xs.reserve(d);
    for (std::size_t k = 0; k < d; ++k) xs.emplace_back(coord(rng));
    const ExactVector a(std::move(xs));
    ++report.samples;
    const auto arg = extremal_vertex_for(p, a);
    std::size_t hits = 0;
    bool hit_arg = false;
    for (const auto& c : sys.cones) {
      if (membership(c, a) == Membership::interior) {
        ++hits;
        hit_arg = hit_arg || (arg && c.label() == *arg);
      }
    }
    if (hits > 1) {
      disjoint = false;
      add_witness(a);
    }
    if (arg) {
      ++report.strict_samples;
      if (hits == 0 || !hit_arg) {
        covers = false;
        add_witness(a);
      }
    } else if (hits > 0) {
      // A tie can never be interior to an open dual cone.
      disjoint = false;
      add_witness(a);
    }
  }

  if (d <= 3) {
    const bool exact = single || (p.full_dimensional() && walls_match(sys));
    report.exact_cover = exact;
    covers = covers && exact;
  }
  report.covers = covers;
  report.disjoint = disjoint;
  return report;
}

}  // namespace sfpoly
