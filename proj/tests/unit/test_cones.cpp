#include <random>
#include <set>

#include "doctest.h"
#include "sfpoly/cones.hpp"
#include "sfpoly/errors.hpp"

using namespace sfpoly;

namespace {

const std::vector<ExactCovector> kPyramid = {{0, 1, 1}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 0}};

std::size_t index_of(const Polytope& p, const ExactCovector& v) {
  for (std::size_t i = 0; i < p.vertex_count(); ++i)
    if (p.vertex(i) == v) return i;
  FAIL("vertex not found");
  return 0;
}

std::set<ExactVector> as_set(const std::vector<ExactVector>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("pyramid dual cones") {
  const Polytope p = convex_hull(kPyramid);
  const auto sys = dual_cones(p);
  REQUIRE(sys.cones.size() == 5);
  std::set<ExactVector> rays;
  std::multiset<std::size_t> counts;
  for (const auto& c : sys.cones) {
    rays.insert(c.generators().begin(), c.generators().end());
    counts.insert(c.generators().size());
    CHECK(c.pointed());
  }
  CHECK(rays == std::set<ExactVector>{{0, -1, -1}, {0, 1, 0}, {1, 1, 1}, {0, 0, 1}, {-1, 0, 0}});
  CHECK(counts == std::multiset<std::size_t>{3, 3, 3, 3, 4});
  // The e0 alias: -e0 = e1 + e2 + e3 is one of the rays.
  const ExactVector e0 = -(ExactVector::unit(3, 0) + ExactVector::unit(3, 1) + ExactVector::unit(3, 2));
  CHECK(rays.count(-e0) == 1);
}

TEST_CASE("apex cone rays and membership") {
  const Polytope p = convex_hull(kPyramid);
  const auto sys = dual_cones(p);
  const std::size_t apex = index_of(p, {0, 1, 1});
  const PolyhedralCone& c = sys.cones[apex];
  CHECK(c.label() == apex);
  CHECK(as_set(extremal_rays(c)) == std::set<ExactVector>{{0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {1, 1, 1}});
  CHECK(membership(c, ExactVector{0, 1, 1}) == Membership::interior);
  CHECK(membership(c, ExactVector{0, 1, 0}) == Membership::boundary);
  CHECK(membership(c, ExactVector{0, -1, -1}) == Membership::outside);
  CHECK_THROWS_AS(membership(c, ExactVector{1, 1}), DimensionMismatch);
  CHECK(std::string(to_string(Membership::boundary)) == "boundary");
}

TEST_CASE("each ray of a pointed 3D cone lies on exactly two walls") {
  for (const auto& c : dual_cones(convex_hull(kPyramid)).cones) {
    for (const auto& g : c.generators()) {
      int on = 0;
      for (const auto& h : c.halfspaces()) on += pairing(h, g).is_zero();
      CHECK(on == 2);
    }
  }
}

TEST_CASE("rays equal the incident facet normals") {
  const Polytope p = convex_hull(kPyramid);
  const auto fs = facets(p);
  for (const auto& c : dual_cones(p).cones) {
    std::set<ExactVector> normals;
    for (const auto& f : fs)
      if (std::count(f.incident_vertex_indices.begin(), f.incident_vertex_indices.end(), c.label()))
        normals.insert(f.outward_normal);
    CHECK(as_set(c.generators()) == normals);
  }
}

TEST_CASE("extremal rays drop redundant generators") {
  const auto c = PolyhedralCone::from_generators({{1, 0}, {0, 1}, {1, 1}}, 2);
  CHECK(extremal_rays(c) == std::vector<ExactVector>{{0, 1}, {1, 0}});
  const auto scaled = PolyhedralCone::from_generators({{2, 0}, {0, 3}, {5, 5}}, 2);
  CHECK(extremal_rays(scaled) == std::vector<ExactVector>{{0, 1}, {1, 0}});
}

TEST_CASE("half-plane has a lineality line") {
  const auto c = PolyhedralCone::from_halfspaces({ExactCovector{1, 0}}, 2);
  CHECK_FALSE(c.pointed());
  CHECK(as_set(c.generators()) == std::set<ExactVector>{{0, 1}, {0, -1}, {1, 0}});
  CHECK(membership(c, ExactVector{1, -7}) == Membership::interior);
  CHECK(membership(c, ExactVector{0, 3}) == Membership::boundary);
  CHECK(membership(c, ExactVector{-1, 0}) == Membership::outside);
}

TEST_CASE("both representations describe the same cone") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coord(-3, 3);
  std::uniform_int_distribution<int> count(1, 5);
  for (int t = 0; t < 60; ++t) {
    std::vector<ExactVector> gens;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) gens.push_back(ExactVector{coord(rng), coord(rng), coord(rng)});
    const auto c = PolyhedralCone::from_generators(gens, 3);
    for (const auto& g : gens) CHECK(membership(c, g) != Membership::outside);
    const auto back = PolyhedralCone::from_halfspaces(c.halfspaces(), 3);
    CHECK(back.generators() == c.generators());
  }
}

TEST_CASE("one-vertex polytope gives the whole space") {
  const Polytope pt = convex_hull(std::vector<ExactCovector>{{1, 2, 3}});
  const auto sys = dual_cones(pt);
  REQUIRE(sys.cones.size() == 1);
  CHECK(sys.cones[0].halfspaces().empty());
  CHECK(membership(sys.cones[0], ExactVector{5, -1, 0}) == Membership::interior);
  const auto r = fan_check(sys);
  CHECK(r.covers);
  CHECK(r.disjoint);
}

TEST_CASE("extremal vertex") {
  const Polytope p = convex_hull(kPyramid);
  CHECK(extremal_vertex_for(p, ExactVector{0, 1, 1}) == index_of(p, {0, 1, 1}));
  CHECK_FALSE(extremal_vertex_for(p, ExactVector{0, 1, 0}));
  CHECK_FALSE(extremal_vertex_for(p, ExactVector::zero(3)));
}

TEST_CASE("membership and argmax agree") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> coord(-5, 5);
  const Polytope p = convex_hull(kPyramid);
  const auto sys = dual_cones(p);
  for (int t = 0; t < 500; ++t) {
    const ExactVector a{coord(rng), coord(rng), coord(rng)};
    const auto arg = extremal_vertex_for(p, a);
    for (const auto& c : sys.cones)
      CHECK((membership(c, a) == Membership::interior) == (arg && *arg == c.label()));
  }
}

TEST_CASE("membership is invariant under positive scaling") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> coord(-6, 6), pos(1, 9);
  const auto sys = dual_cones(convex_hull(kPyramid));
  for (int t = 0; t < 200; ++t) {
    const ExactVector a{coord(rng), coord(rng), coord(rng)};
    const Rational l(pos(rng), pos(rng));
    for (const auto& c : sys.cones) CHECK(membership(c, l * a) == membership(c, a));
  }
}

TEST_CASE("dual cones are translation invariant") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> coord(-50, 50);
  const Polytope p = convex_hull(kPyramid);
  const auto base = dual_cones(p);
  for (int t = 0; t < 20; ++t) {
    const ExactCovector w{coord(rng), coord(rng), coord(rng)};
    const auto moved = dual_cones(translate(p, w));
    for (std::size_t i = 0; i < base.cones.size(); ++i)
      CHECK(moved.cones[i].generators() == base.cones[i].generators());
  }
}

TEST_CASE("foliation cones") {
  LabeledSupport all;
  for (const auto& v : kPyramid) all.insert(v, {1, true});
  CHECK(foliation_cones(all).cones.size() == 5);

  LabeledSupport apex_rank2;
  for (const auto& v : kPyramid) apex_rank2.insert(v, v == ExactCovector{0, 1, 1} ? RankDescriptor{2, false} : RankDescriptor{1, true});
  const auto four = foliation_cones(apex_rank2);
  CHECK(four.cones.size() == 4);
  CHECK(four.system.cones.size() == 5);

  LabeledSupport one;
  one.insert(ExactCovector{0, 0, 0}, {1, true});
  const auto single = foliation_cones(one);
  REQUIRE(single.cones.size() == 1);
  CHECK(single.cones[0].halfspaces().empty());

  // Labels at non-vertex support points are ignored.
  LabeledSupport with_interior = all;
  with_interior.insert(ExactCovector{Rational(1, 2), Rational(1, 2), Rational(1, 2)}, {4, false});
  CHECK(foliation_cones(with_interior).cones.size() == 5);

  CHECK_THROWS_AS(foliation_cones(LabeledSupport{}), EmptyInput);
}

TEST_CASE("fan check on the pyramid") {
  const auto r = fan_check(dual_cones(convex_hull(kPyramid)));
  CHECK(r.covers);
  CHECK(r.disjoint);
  CHECK(r.samples == 10000);
  REQUIRE(r.exact_cover);
  CHECK(*r.exact_cover);
  CHECK(r.witnesses.empty());
  CHECK_FALSE(r.lineality);
}

TEST_CASE("fan check on a segment in the plane") {
  const Polytope seg = convex_hull(std::vector<ExactCovector>{{0, 0}, {2, 1}});
  const auto r = fan_check(dual_cones(seg));
  CHECK_FALSE(r.covers);
  CHECK(r.disjoint);
  CHECK(r.lineality);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(pairing(ExactCovector{2, 1}, r.witnesses.front()).is_zero());
}

TEST_CASE("fan check catches overlapping cones") {
  DualConeSystem sys = dual_cones(convex_hull(std::vector<ExactCovector>{{0, 0}, {1, 0}, {0, 1}}));
  // Replace one cone by the whole plane: interiors now overlap.
  sys.cones[0] = PolyhedralCone::from_halfspaces({}, 2, sys.cones[0].label());
  const auto r = fan_check(sys, {1, 2000, 100, 4});
  CHECK_FALSE(r.disjoint);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("fan check catches a missing cone") {
  DualConeSystem sys = dual_cones(convex_hull(std::vector<ExactCovector>{{0, 0}, {1, 0}, {0, 1}}));
  sys.cones.pop_back();
  const auto r = fan_check(sys, {1, 2000, 100, 4});
  CHECK_FALSE(r.covers);
}

TEST_CASE("fan check is deterministic for a fixed seed") {
  const auto sys = dual_cones(convex_hull(kPyramid));
  FanCheckOptions opt;
  opt.seed = 99;
  opt.samples = 500;
  const auto a = fan_check(sys, opt);
  const auto b = fan_check(sys, opt);
  CHECK(a.strict_samples == b.strict_samples);
  CHECK(a.samples == 500);
}
