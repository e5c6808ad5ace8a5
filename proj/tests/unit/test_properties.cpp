// Cross-module properties over the shipped examples.

#include <random>

#include "doctest.h"
#include "sfpoly/corpus.hpp"
#include "sfpoly/foxcalc.hpp"
#include "sfpoly/norms.hpp"
#include "sfpoly/oracles.hpp"
#include "sfpoly/verify.hpp"

using namespace sfpoly;

TEST_CASE("every example: fan axioms and the ball bridge") {
  for (const auto& name : example_names()) {
    CAPTURE(name);
    const auto ex = load_example(name);
    const auto fr = fan_check(dual_cones(ex.polytope), {7, 2000, 100, 4});
    CHECK(fr.disjoint);
    if (ex.polytope.full_dimensional()) {
      CHECK(fr.covers);
      CHECK_FALSE(verify::duality_bridge_mismatch(ex.polytope));
    }
  }
}

TEST_CASE("fundamental identity holds for every shipped relator") {
  for (const auto& name : example_names()) {
    const auto ex = load_example(name);
    if (!ex.presentation) continue;
    CAPTURE(name);
    const auto data = parse_presentation(*ex.presentation);
    for (const auto& r : data.presentation.relators())
      CHECK(verify::fundamental_identity_residue(r, data.abelianization).is_zero());
  }
}

TEST_CASE("polynomial minors agree with rational evaluation") {
  const std::vector<Rational> at{Rational(2), Rational(-3, 2), Rational(5, 7)};
  for (const char* name : {"pretzel-2-2-2", "pretzel-2-4-2"}) {
    CAPTURE(name);
    const auto data = parse_presentation(*load_example(name).presentation);
    const auto& pr = data.presentation;
    const auto& ab = data.abelianization;
    const auto m = alexander_matrix(pr, ab);
    for (std::size_t col = 0; col < pr.generator_count(); ++col) {
      LaurentMatrix minor;
      for (const auto& row : m) {
        std::vector<LaurentPolynomial> r;
        for (std::size_t j = 0; j < row.size(); ++j)
          if (j != col) r.push_back(row[j]);
        minor.push_back(r);
      }
      CHECK(determinant(minor, ab.rank()).evaluate(at) == oracle::fox_minor_at(pr, ab, col, at));
    }
  }
}

TEST_CASE("translated polytopes have the same y but shifted y_t") {
  std::mt19937_64 rng(79);
  std::uniform_int_distribution<long> coord(-9, 9);
  const auto p = load_example("pretzel-2-4-2").polytope;
  const auto c = centered(p);
  for (int t = 0; t < 50; ++t) {
    const ExactCovector w{coord(rng), coord(rng), coord(rng)};
    const ExactVector a{coord(rng), coord(rng), coord(rng)};
    const auto moved = translate(p, w);
    CHECK(centered(moved) == c);
    CHECK(y_t(moved, a) == y_t(p, a) - pairing(w, a));
  }
}

TEST_CASE("the library suite passes") {
  const auto results = verify::primary_suite({});
  CHECK(results.size() == 9);
  for (const auto& r : results) {
    CAPTURE(r.id);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("reports are deterministic") {
  const auto a = verify::full_report({"cc-two-component-link"}, {});
  const auto b = verify::full_report({"cc-two-component-link"}, {});
  CHECK(a.text() == b.text());
  CHECK(a.json() == b.json());
  CHECK(a.passed());
}
