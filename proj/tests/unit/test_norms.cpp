#include <random>
#include <set>

#include "doctest.h"
#include "sfpoly/cones.hpp"
#include "sfpoly/norms.hpp"

using namespace sfpoly;

namespace {

const std::vector<ExactCovector> kPyramid = {{0, 1, 1}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 0}};

Rational q(long n, long d = 1) { return Rational(n, d); }

std::size_t index_of(const Polytope& p, const ExactCovector& v) {
  for (std::size_t i = 0; i < p.vertex_count(); ++i)
    if (p.vertex(i) == v) return i;
  FAIL("vertex not found");
  return 0;
}

ExactVector random_vector(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
  return ExactVector{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

SurfaceComplexityData surface(std::initializer_list<SurfaceComponent> cs) { return {std::vector<SurfaceComponent>(cs)}; }

}  // namespace

TEST_CASE("support function on the pyramid") {
  const Polytope p = convex_hull(kPyramid);
  const auto e1 = support_min(p, ExactVector{1, 0, 0});
  CHECK(e1.value == q(0));
  CHECK(e1.attaining_face.vertex_indices ==
        std::vector<std::size_t>{index_of(p, {0, 0, 1}), index_of(p, {0, 1, 0}), index_of(p, {0, 1, 1})});
  const auto zero = support_min(p, ExactVector::zero(3));
  CHECK(zero.value == q(0));
  CHECK(zero.attaining_face.vertex_indices.size() == 5);
  const auto yz = support_min(p, ExactVector{0, 1, 1});
  CHECK(yz.value == q(1));
  CHECK(yz.attaining_face.vertex_indices.size() == 4);
  CHECK(std::count(yz.attaining_face.vertex_indices.begin(), yz.attaining_face.vertex_indices.end(),
                   index_of(p, {0, 1, 1})) == 0);
  CHECK_THROWS_AS(support_min(p, ExactVector{1, 0}), DimensionMismatch);
}

TEST_CASE("y_t is the negated support function") {
  const Polytope p = convex_hull(kPyramid);
  CHECK(y_t(p, ExactVector{1, 0, 0}) == q(0));
  CHECK(y_t(p, ExactVector{-1, 0, 0}) == q(1));
  CHECK(y_t(p, ExactVector::zero(3)) == q(0));
  // Negative values are reported as they are.
  CHECK(y_t(p, ExactVector{0, 1, 1}) == q(-1));
}

TEST_CASE("y and z on the centered pyramid") {
  const Polytope c = centered(convex_hull(kPyramid));
  CHECK(y_seminorm(c, ExactVector{1, 0, 0}) == q(2, 5));
  CHECK(y_seminorm(c, ExactVector{-1, 0, 0}) == q(3, 5));
  CHECK(y_seminorm(c, ExactVector{0, 1, 1}) == q(1, 5));
  CHECK(y_seminorm(c, ExactVector::zero(3)) == q(0));
  CHECK(z_symmetrized(c, ExactVector{1, 0, 0}) == q(1, 2));
  CHECK(z_symmetrized(c, ExactVector::zero(3)) == q(0));
  CHECK_THROWS_AS(y_seminorm(convex_hull(kPyramid), ExactVector{1, 0, 0}), NotCentered);
  CHECK_THROWS_AS(z_symmetrized(convex_hull(kPyramid), ExactVector{1, 0, 0}), NotCentered);
}

TEST_CASE("z is symmetric") {
  std::mt19937_64 rng(43);
  const Polytope c = centered(convex_hull(kPyramid));
  for (int t = 0; t < 200; ++t) {
    const auto a = random_vector(rng);
    CHECK(z_symmetrized(c, a) == z_symmetrized(c, -a));
  }
}

TEST_CASE("homogeneity and triangle inequality") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> pos(1, 12);
  const Polytope p = convex_hull(kPyramid);
  const Polytope c = centered(p);
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_vector(rng);
    const auto b = random_vector(rng);
    const Rational l(pos(rng), pos(rng));
    CHECK(y_t(p, l * a) == l * y_t(p, a));
    CHECK(y_seminorm(c, l * a) == l * y_seminorm(c, a));
    CHECK(y_t(p, a + b) <= y_t(p, a) + y_t(p, b));
    CHECK(y_seminorm(c, a + b) <= y_seminorm(c, a) + y_seminorm(c, b));
    CHECK(y_seminorm(c, a) >= q(0));
  }
}

TEST_CASE("unit ball of the square is the cross-polytope") {
  const Polytope sq = convex_hull(std::vector<ExactCovector>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  const NormBall b = unit_ball(sq);
  REQUIRE(b.bounded());
  CHECK(b.polytope().vertices() == std::vector<ExactVector>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
}

TEST_CASE("unit ball of the pyramid") {
  const Polytope c = centered(convex_hull(kPyramid));
  const NormBall b = unit_ball(c);
  REQUIRE(b.bounded());
  CHECK(facets(b.polytope()).size() == c.vertex_count());
}

TEST_CASE("unit ball of a segment is unbounded") {
  const Polytope seg = centered(convex_hull(std::vector<ExactCovector>{{0, 0}, {2, 0}}));
  const NormBall b = unit_ball(seg);
  CHECK_FALSE(b.bounded());
  CHECK(b.halfspaces().normals.size() == 2);
  CHECK(b.contains(ExactVector{0, 1000}));
  CHECK_FALSE(b.contains(ExactVector{2, 0}));
}

TEST_CASE("ball membership matches the seminorm") {
  std::mt19937_64 rng(53);
  const Polytope c = centered(convex_hull(kPyramid));
  const NormBall b = unit_ball(c);
  int inside = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto a = (Rational(1, 8)) * random_vector(rng);
    const bool in = b.contains(a);
    inside += in;
    CHECK(in == (y_seminorm(c, -a) <= q(1)));
  }
  CHECK(inside > 0);
  CHECK(inside < 1000);
  // Ball facet points sit on the level set.
  for (const auto& v : b.polytope().vertices()) CHECK(y_seminorm(c, -v) == q(1));
}

TEST_CASE("polar of the polar is the original polytope") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<long> coord(-4, 4);
  int tested = 0;
  for (int t = 0; t < 40; ++t) {
    std::vector<ExactCovector> pts;
    for (int i = 0; i < 7; ++i) pts.push_back(ExactCovector{coord(rng), coord(rng), coord(rng)});
    const Polytope p = convex_hull(pts);
    if (!p.full_dimensional()) continue;
    ++tested;
    const Polytope c = centered(p);
    const NormBall b = unit_ball(c);
    REQUIRE(b.bounded());
    // Facets {a : <n, a> <= offset} of the ball give back the vertices n / offset.
    std::vector<ExactCovector> back;
    for (const auto& f : facets(b.polytope())) back.push_back(ExactCovector::from(f.outward_normal) * (1 / f.offset));
    CHECK(convex_hull(back) == c);
  }
  CHECK(tested > 20);
}

TEST_CASE("ball facets subtend the dual cones") {
  const Polytope c = centered(convex_hull(kPyramid));
  const auto sys = dual_cones(c);
  const auto ball = unit_ball(c).polytope();
  for (const auto& f : facets(ball)) {
    // The facet's normal is the vertex it corresponds to, up to scale.
    const ExactCovector vertex = ExactCovector::from(f.outward_normal) * (1 / f.offset);
    const std::size_t i = index_of(c, vertex);
    std::vector<ExactVector> rays;
    for (auto k : f.incident_vertex_indices) rays.push_back(primitive(ball.vertex(k)));
    std::sort(rays.begin(), rays.end());
    CHECK(rays == sys.cones[i].generators());
  }
}

TEST_CASE("thurston-type complexities") {
  CHECK(chi_minus(surface({{2, 0, 0}})) == 0);
  CHECK(chi_minus(surface({{-2, 0, 0}})) == 2);
  CHECK(chi_minus(surface({{-1, 0, 0}, {-3, 0, 0}})) == 4);
  CHECK(chi_minus(surface({})) == 0);

  CHECK(chi_beta(surface({{1, 0, 2}})) == 1);
  CHECK(chi_beta(surface({{2, 0, 1}})) == 0);
  CHECK(chi_beta(surface({{-1, 0, 0}, {0, 0, 3}})) == 4);

  CHECK(chi_s_minus(surface({{1, 4, 0}})) == q(1));
  CHECK(chi_s_minus(surface({{1, 3, 0}})) == q(1, 2));
  CHECK(chi_s_minus(surface({{0, 0, 0}})) == q(0));
}

TEST_CASE("c(S, t) and the index") {
  CHECK(c_S_t({1, q(-2), 0}) == q(-1));
  CHECK(c_S_t({0, q(0), 0}) == q(0));
  CHECK(c_S_t({-2, q(-3, 2), 1}) == q(-9, 2));
  CHECK(index_from_suture_count(4) == q(-2));
  CHECK(index_from_suture_count(0) == q(0));
  CHECK(index_from_suture_count(3) == q(-3, 2));
}

// The identity needs -chi + n/2 >= 0 per component; with only -chi + n >= 0,
// chi = 2, n = 2 is a counterexample.
TEST_CASE("chi_beta = 2 chi_s_minus + chi when beta meets the sutures") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> euler(-6, 2), count(0, 10), comps(1, 5);
  for (int t = 0; t < 500; ++t) {
    SurfaceComplexityData s;
    long total_chi = 0;
    const long n = comps(rng);
    while (static_cast<long>(s.components.size()) < n) {
      const long chi = euler(rng), k = count(rng);
      if (-2 * chi + k < 0) continue;
      s.components.push_back({chi, k, k});
      total_chi += chi;
    }
    CHECK(Rational(chi_beta(s)) == 2 * chi_s_minus(s) + Rational(total_chi));
  }
  const auto sphere = surface({{2, 2, 2}});
  CHECK(Rational(chi_beta(sphere)) != 2 * chi_s_minus(sphere) + Rational(2));
}
