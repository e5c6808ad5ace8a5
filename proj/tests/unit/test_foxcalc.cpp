#include <random>

#include "doctest.h"
#include "sfpoly/errors.hpp"
#include "sfpoly/foxcalc.hpp"
#include "sfpoly/oracles.hpp"

using namespace sfpoly;

namespace {

LaurentPolynomial poly(std::size_t vars, std::initializer_list<std::pair<Exponent, long>> terms) {
  LaurentPolynomial f(vars);
  for (const auto& [e, c] : terms) f.add_term(e, c);
  return f;
}

GroupPresentation single(std::size_t n, const std::string& relator) {
  return GroupPresentation(n, {FreeWord::parse(relator)});
}

const char* const kTrefoil = "x1 x2 x1 x2^-1 x1^-1 x2^-1";
const char* const kFigureEight = "x1 x2^-1 x1^-1 x2 x1 x2^-1 x1 x2 x1^-1 x2^-1";

FreeWord random_word(std::mt19937_64& rng, std::size_t gens, int length) {
  std::uniform_int_distribution<std::size_t> g(0, gens - 1);
  std::bernoulli_distribution s(0.5);
  std::vector<Letter> ls;
  for (int i = 0; i < length; ++i) ls.push_back({g(rng), s(rng) ? 1 : -1});
  return FreeWord(ls);
}

}  // namespace

TEST_CASE("word parsing and reduction") {
  const FreeWord w = FreeWord::parse("x1 x2^-1 x2 x3");
  CHECK(w.length() == 4);
  CHECK(w.reduced() == FreeWord::parse("x1 x3"));
  CHECK(FreeWord::parse("x2^-1 x1 x3 x2").cyclically_reduced() == FreeWord::parse("x1 x3"));
  CHECK(FreeWord::parse("").empty());
  CHECK(FreeWord::parse("x12^-1").letters().front() == Letter{11, -1});
  CHECK(w.inverse().str() == "x3^-1 x2^-1 x2 x1^-1");
  CHECK((w * w.inverse()).reduced().empty());
  CHECK_THROWS_AS(FreeWord::parse("y1"), ParseError);
  CHECK_THROWS_AS(FreeWord::parse("x0"), ParseError);
  CHECK_THROWS_AS(FreeWord::parse("x1^2"), ParseError);
  CHECK_THROWS_AS(FreeWord::parse("X1"), ParseError);
}

TEST_CASE("presentations validate generators") {
  CHECK_THROWS_AS(single(2, "x3"), DomainError);
  const auto pr = single(2, "x2 x1 x1^-1 x2^-1 x1");
  CHECK(pr.relators().front() == FreeWord::parse("x1"));
  CHECK(pr.deficiency() == 1);
}

TEST_CASE("fox derivative base rules") {
  const GroupPresentation free2(2, {});
  const AbelianizationMap ab(free2, {{1, 0}, {0, 1}});
  CHECK(fox_derivative(FreeWord::parse("x1"), 0, ab) == LaurentPolynomial::constant(2, 1));
  CHECK(fox_derivative(FreeWord::parse("x1^-1"), 0, ab) == LaurentPolynomial::monomial({-1, 0}, -1));
  CHECK(fox_derivative(FreeWord::parse("x2"), 0, ab).is_zero());
  CHECK(fox_derivative(FreeWord::parse("x1 x2 x1^-1"), 0, ab) == poly(2, {{{0, 0}, 1}, {{0, 1}, -1}}));
  CHECK(fox_derivative(FreeWord::parse("x1 x2 x1^-1"), 1, ab) == LaurentPolynomial::monomial({1, 0}));
  CHECK_THROWS_AS(fox_derivative(FreeWord::parse("x1"), 2, ab), DomainError);
}

TEST_CASE("abelianization must kill the relators") {
  const auto pr = single(2, kTrefoil);
  CHECK_NOTHROW(AbelianizationMap(pr, {{1}, {1}}));
  CHECK_THROWS_AS(AbelianizationMap(pr, {{1}, {2}}), DomainError);
  CHECK_THROWS_AS(AbelianizationMap(pr, {{1}}), DomainError);
  CHECK_THROWS_AS(AbelianizationMap(pr, {{1, 0}, {1}}), DomainError);
  const AbelianizationMap ab(pr, {{1}, {1}});
  CHECK(ab.apply(FreeWord::parse("x1 x2 x1^-1")) == Exponent{1});
}

TEST_CASE("alexander matrix of the trefoil") {
  const auto pr = single(2, kTrefoil);
  const AbelianizationMap ab(pr, {{1}, {1}});
  const auto m = alexander_matrix(pr, ab);
  REQUIRE(m.size() == 1);
  REQUIRE(m[0].size() == 2);
  CHECK(m[0][0] == poly(1, {{{0}, 1}, {{1}, -1}, {{2}, 1}}));
  CHECK(m[0][1] == -m[0][0]);

  const GroupPresentation unknot(1, {});
  CHECK(alexander_matrix(unknot, AbelianizationMap(unknot, {{1}})).empty());
}

TEST_CASE("alexander polynomials") {
  const GroupPresentation unknot(1, {});
  CHECK(alexander_polynomial(unknot, AbelianizationMap(unknot, {{1}})) == LaurentPolynomial::constant(1, 1));

  const auto tre = single(2, kTrefoil);
  const auto dt = alexander_polynomial(tre, AbelianizationMap(tre, {{1}, {1}}));
  CHECK(dt == poly(1, {{{0}, 1}, {{1}, -1}, {{2}, 1}}));
  CHECK(dt.str() == "t^2 - t + 1");
  CHECK(dt.inverted().normalized() == dt);

  const auto fig = single(2, kFigureEight);
  const auto df = alexander_polynomial(fig, AbelianizationMap(fig, {{1}, {1}}));
  CHECK(df == poly(1, {{{0}, 1}, {{1}, -3}, {{2}, 1}}));
  CHECK(df.evaluate({Rational(1)}) == Rational(-1));
}

TEST_CASE("alexander polynomial needs deficiency one") {
  const GroupPresentation two(2, {FreeWord::parse("x1 x2 x1^-1 x2^-1"), FreeWord::parse("x1 x2 x1^-1 x2^-1")});
  CHECK_THROWS_AS(alexander_polynomial(two, AbelianizationMap(two, {{1, 0}, {0, 1}})), DomainError);
  const GroupPresentation free2(2, {});
  CHECK_THROWS_AS(alexander_polynomial(free2, AbelianizationMap(free2, {{1, 0}, {0, 1}})), DomainError);
}

TEST_CASE("fox derivatives agree with rational evaluation") {
  std::mt19937_64 rng(67);
  const GroupPresentation free3(3, {});
  const AbelianizationMap ab(free3, {{1, 0}, {0, 1}, {1, -1}});
  const std::vector<Rational> at{Rational(2, 3), Rational(-5, 2)};
  for (int t = 0; t < 100; ++t) {
    const FreeWord w = random_word(rng, 3, 8);
    for (std::size_t g = 0; g < 3; ++g)
      CHECK(fox_derivative(w, g, ab).evaluate(at) == oracle::fox_at(w, g, ab, at));
  }
}

TEST_CASE("free reduction does not change the derivative") {
  std::mt19937_64 rng(71);
  const GroupPresentation free3(3, {});
  const AbelianizationMap ab(free3, {{1, 0}, {0, 1}, {2, 1}});
  for (int t = 0; t < 200; ++t) {
    const FreeWord w = random_word(rng, 3, 12);
    for (std::size_t g = 0; g < 3; ++g) CHECK(fox_derivative(w, g, ab) == fox_derivative(w.reduced(), g, ab));
  }
}

TEST_CASE("fundamental identity on knot relators") {
  for (const char* r : {kTrefoil, kFigureEight}) {
    const auto pr = single(2, r);
    const AbelianizationMap ab(pr, {{1}, {1}});
    LaurentPolynomial sum(1);
    for (std::size_t g = 0; g < 2; ++g)
      sum += fox_derivative(pr.relators().front(), g, ab) *
             (LaurentPolynomial::monomial(ab.image(g)) - LaurentPolynomial::constant(1, 1));
    CHECK(sum.is_zero());
  }
}

TEST_CASE("laurent arithmetic") {
  const auto f = poly(2, {{{0, 0}, 1}, {{1, -1}, 2}});
  CHECK((f - f).is_zero());
  CHECK((f * LaurentPolynomial::constant(2, 0)).is_zero());
  CHECK(f.shifted({-1, 1}) == poly(2, {{{-1, 1}, 1}, {{0, 0}, 2}}));
  CHECK(f.inverted() == poly(2, {{{0, 0}, 1}, {{-1, 1}, 2}}));
  const auto binom = LaurentPolynomial::monomial({2, 1}) - LaurentPolynomial::constant(2, 1);
  CHECK((f * binom).divided_by_binomial({2, 1}) == f);
  CHECK((f * binom).divided_by_binomial({-2, -1}) == -f.shifted({2, 1}));
  CHECK_THROWS_AS(f.divided_by_binomial({1, 0}), DomainError);
  CHECK(f.normalized() == poly(2, {{{0, 1}, 1}, {{1, 0}, 2}}));
  CHECK((-f).normalized() == f.normalized());
  CHECK(determinant({}, 3) == LaurentPolynomial::constant(3, 1));
}

TEST_CASE("newton polytopes") {
  const Polytope seg = newton_polytope(poly(1, {{{0}, 1}, {{1}, -1}, {{2}, 1}}));
  CHECK(seg.vertices() == std::vector<ExactCovector>{{0}, {2}});
  const Polytope pt = newton_polytope(LaurentPolynomial::constant(1, 5));
  CHECK(pt.vertices() == std::vector<ExactCovector>{{0}});
  const Polytope tri = newton_polytope(poly(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}));
  CHECK(tri.vertices() == std::vector<ExactCovector>{{0, 0}, {0, 1}, {1, 0}});
  CHECK_THROWS_AS(newton_polytope(LaurentPolynomial(2)), DomainError);
}

TEST_CASE("newton polytope of a product is the Minkowski sum") {
  std::mt19937_64 rng(73);
  std::uniform_int_distribution<long> e(-2, 2), c(-3, 3);
  std::uniform_int_distribution<int> n(1, 4);
  for (int t = 0; t < 100; ++t) {
    LaurentPolynomial f(2), g(2);
    while (f.is_zero())
      for (int i = n(rng); i > 0; --i) f.add_term({e(rng), e(rng)}, c(rng));
    while (g.is_zero())
      for (int i = n(rng); i > 0; --i) g.add_term({e(rng), e(rng)}, c(rng));
    std::vector<ExactCovector> sums;
    for (const auto& [a, _] : f.terms())
      for (const auto& [b, __] : g.terms()) sums.push_back(ExactCovector{a[0] + b[0], a[1] + b[1]});
    CHECK(newton_polytope(f * g) == convex_hull(sums));
  }
}

TEST_CASE("labeled support from coefficients") {
  const auto tre = poly(1, {{{0}, 1}, {{1}, -1}, {{2}, 1}});
  const auto ls = labeled_support(tre, true);
  CHECK(ls.size() == 3);
  CHECK_FALSE(ls.warning);
  for (const auto& [_, r] : ls.entries()) CHECK(r == RankDescriptor{1, true});

  const auto bad = labeled_support(poly(1, {{{0}, 2}, {{1}, 1}}), true);
  CHECK(bad.warning);
  CHECK_FALSE(bad.warning_message.empty());
  CHECK(bad.at(ExactCovector{0}) == RankDescriptor{2, false});
  CHECK(bad.at(ExactCovector{1}) == RankDescriptor{1, true});

  const auto off = labeled_support(poly(1, {{{0}, 1}, {{1}, -3}, {{2}, 1}}), false);
  CHECK_FALSE(off.warning);
  for (const auto& [_, r] : off.entries()) CHECK_FALSE(r.is_exactly_z);
  CHECK(off.at(ExactCovector{1}).rank == 3);
}

TEST_CASE("presentation files") {
  const auto data = parse_presentation(
      "# trefoil\n"
      "generators: 2\n"
      "abelianization: 1\n"
      "1\n"
      "1\n"
      "\n"
      "x1 x2 x1 x2^-1 x1^-1 x2^-1\n");
  CHECK(data.presentation.generator_count() == 2);
  CHECK(data.presentation.relators().size() == 1);
  CHECK(data.abelianization.rank() == 1);
  CHECK(alexander_polynomial(data.presentation, data.abelianization).str() == "t^2 - t + 1");

  CHECK_THROWS_AS(parse_presentation(""), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: two\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: 2\nabelianization: 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: 2\nabelianization: 1\n1\n1 0\nx1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: 1\nabelianization: 1\n1\nx1\n"), DomainError);
}
