#include "sfpoly/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "sfpoly/io.hpp"
#include "sfpoly/norms.hpp"
#include "sfpoly/oracles.hpp"

namespace sfpoly::verify {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long bound = 20, long max_den = 9) {
    return Rational(integer(-bound, bound), integer(1, max_den));
  }

  Rational positive(long bound = 20, long max_den = 9) {
    return Rational(integer(1, bound), integer(1, max_den));
  }

  template <class Tag>
  Coords<Tag> rational_coords(std::size_t d) {
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < d; ++i) xs.push_back(rational());
    return Coords<Tag>(std::move(xs));
  }

  template <class Tag>
  Coords<Tag> integer_coords(std::size_t d, long bound) {
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < d; ++i) xs.emplace_back(integer(-bound, bound));
    return Coords<Tag>(std::move(xs));
  }

 private:
  std::mt19937_64 rng_;
};

const std::vector<ExactCovector> kPyramidPoints = {
    {0, 1, 1}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 0}};

const std::set<ExactVector> kPyramidRays = {
    {0, -1, -1}, {0, 1, 0}, {1, 1, 1}, {0, 0, 1}, {-1, 0, 0}};

// Reference Alexander polynomials from an independent symbolic expansion.
LaurentPolynomial polynomial(std::size_t vars,
                             const std::vector<std::pair<Exponent, long>>& terms) {
  LaurentPolynomial f(vars);
  for (const auto& [e, c] : terms) f.add_term(e, c);
  return f;
}

LaurentPolynomial reference_polynomial(const std::string& name) {
  if (name == "trefoil") return polynomial(1, {{{0}, 1}, {{1}, -1}, {{2}, 1}});
  if (name == "figure-eight") return polynomial(1, {{{0}, 1}, {{1}, -3}, {{2}, 1}});
  if (name == "pretzel-2-2-2")
    return polynomial(3, {{{1, 1, 1}, 1},
                          {{1, 1, 0}, -1},
                          {{1, 0, 1}, -1},
                          {{0, 1, 0}, 1},
                          {{0, 0, 1}, 1},
                          {{0, 0, 0}, -1}})
        .normalized();
  if (name == "pretzel-2-4-2")
    return polynomial(3, {{{1, 2, 1}, 1},
                          {{1, 2, 0}, -1},
                          {{1, 1, 2}, 1},
                          {{1, 1, 1}, -1},
                          {{1, 0, 2}, -1},
                          {{0, 2, 0}, 1},
                          {{0, 1, 1}, 1},
                          {{0, 1, 0}, -1},
                          {{0, 0, 2}, 1},
                          {{0, 0, 1}, -1}})
        .normalized();
  throw DomainError("no reference polynomial for '" + name + "'");
}

template <class T>
std::string join(const T& items, const std::string& sep = ", ") {
  std::string out;
  for (const auto& x : items) {
    if (!out.empty()) out += sep;
    out += x.str();
  }
  return out;
}

std::string counts_str(const std::vector<std::size_t>& counts) {
  std::string out;
  for (auto c : counts) out += (out.empty() ? "" : ",") + std::to_string(c);
  return out;
}

std::vector<std::size_t> generator_counts(const std::vector<PolyhedralCone>& cones) {
  std::vector<std::size_t> out;
  for (const auto& c : cones) out.push_back(c.generators().size());
  std::sort(out.begin(), out.end());
  return out;
}

std::string fan_summary(const FanReport& r) {
  std::ostringstream s;
  s << "covers=" << (r.covers ? "yes" : "no") << " disjoint=" << (r.disjoint ? "yes" : "no")
    << " samples=" << r.samples << " strict=" << r.strict_samples;
  if (r.exact_cover) s << " exact-walls=" << (*r.exact_cover ? "yes" : "no");
  if (!r.witnesses.empty()) s << " first-witness=" << r.witnesses.front().str();
  return s.str();
}

LaurentPolynomial column_minor(const LaurentMatrix& a, std::size_t skip, std::size_t vars) {
  LaurentMatrix m;
  for (const auto& row : a) {
    std::vector<LaurentPolynomial> r;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (j != skip) r.push_back(row[j]);
    m.push_back(std::move(r));
  }
  return determinant(m, vars);
}

LaurentPolynomial binomial(const Exponent& v) {
  return LaurentPolynomial::monomial(v) - LaurentPolynomial::constant(v.size(), 1);
}

// Checks every shipped presentation column by column: the polynomial minor
// agrees with the rational-evaluation oracle, and equals Delta times the
// expected abelian factor up to a unit.
std::optional<std::string> presentation_mismatch(const std::string& name, Sampler& rng) {
  const PresentationData data = parse_presentation(example_source(name));
  const auto& pr = data.presentation;
  const auto& ab = data.abelianization;
  const std::size_t b = ab.rank();
  for (const auto& r : pr.relators()) {
    const auto residue = fundamental_identity_residue(r, ab);
    if (!residue.is_zero())
      return name + ": fundamental identity fails for '" + r.str() + "': " + residue.str();
  }
  const LaurentPolynomial delta = alexander_polynomial(pr, ab);
  if (delta != reference_polynomial(name))
    return name + ": Alexander polynomial " + delta.str() + " differs from reference " +
           reference_polynomial(name).str();
  if (b == 1 && delta.inverted().normalized() != delta)
    return name + ": Delta(t) and Delta(1/t) differ beyond a unit";
  const LaurentMatrix a = alexander_matrix(pr, ab);
  for (std::size_t j = 0; j < pr.generator_count(); ++j) {
    const LaurentPolynomial minor = column_minor(a, j, b);
    for (int k = 0; k < 3; ++k) {
      std::vector<Rational> t;
      for (std::size_t i = 0; i < b; ++i) {
        Rational x = rng.rational(7, 5);
        while (x.is_zero()) x = rng.rational(7, 5);
        t.push_back(x);
      }
      if (minor.evaluate(t) != oracle::fox_minor_at(pr, ab, j, t))
        return name + ": minor " + std::to_string(j + 1) + " disagrees with the evaluation oracle";
    }
    LaurentPolynomial expected = delta * binomial(ab.image(j));
    if (b == 1) expected = expected.divided_by_binomial({1});
    if (minor.normalized() != expected.normalized())
      return name + ": minor " + std::to_string(j + 1) + " is not Delta times its abelian factor";
  }
  return std::nullopt;
}

}  // namespace

bool Section::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool Report::passed() const {
  return std::all_of(sections.begin(), sections.end(), [](const Section& s) { return s.passed(); });
}

std::string Report::text() const {
  std::ostringstream out;
  for (const auto& s : sections) {
    out << "== " << s.title << " ==\n";
    for (const auto& [k, v] : s.facts) out << "  " << k << ": " << v << "\n";
    for (const auto& c : s.checks) {
      out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.id << " " << c.title;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
  }
  out << "verdict: " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

nlohmann::json Report::json() const {
  nlohmann::json secs = nlohmann::json::array();
  for (const auto& s : sections) {
    nlohmann::json facts = nlohmann::json::array();
    for (const auto& [k, v] : s.facts) facts.push_back({{"key", k}, {"value", v}});
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : s.checks)
      checks.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
    secs.push_back({{"title", s.title}, {"facts", facts}, {"checks", checks}, {"passed", s.passed()}});
  }
  return {{"sections", secs}, {"passed", passed()}};
}

std::set<std::vector<ExactVector>> cone_ray_sets(const std::vector<PolyhedralCone>& cones) {
  std::set<std::vector<ExactVector>> out;
  for (const auto& c : cones) out.insert(c.generators());
  return out;
}

std::set<ExactVector> ray_union(const std::vector<PolyhedralCone>& cones) {
  std::set<ExactVector> out;
  for (const auto& c : cones) out.insert(c.generators().begin(), c.generators().end());
  return out;
}

std::set<std::vector<ExactVector>> ball_facet_cones(const Polytope& p) {
  const NormBall ball = unit_ball(centered(p));
  if (!ball.bounded()) throw NotFullDimensional(p.affine_dim(), p.ambient_dim());
  const BallPolytope& b = ball.polytope();
  std::set<std::vector<ExactVector>> out;
  for (const auto& f : facets(b)) {
    std::vector<ExactVector> gens;
    for (auto i : f.incident_vertex_indices) gens.push_back(b.vertex(i));
    out.insert(PolyhedralCone::from_generators(gens, p.ambient_dim()).generators());
  }
  return out;
}

std::optional<std::string> duality_bridge_mismatch(const Polytope& p) {
  if (!p.full_dimensional()) return "polytope is not full-dimensional";
  const auto ball = ball_facet_cones(p);
  const auto dual = cone_ray_sets(dual_cones(p).cones);
  if (ball == dual) return std::nullopt;
  for (const auto& c : dual)
    if (!ball.count(c)) return "dual cone {" + join(c) + "} is not a facet cone of the unit ball";
  for (const auto& c : ball)
    if (!dual.count(c)) return "unit-ball facet cone {" + join(c) + "} is not a dual cone";
  return "cone systems differ";
}

LaurentPolynomial fundamental_identity_residue(const FreeWord& r, const AbelianizationMap& ab) {
  LaurentPolynomial sum(ab.rank());
  for (std::size_t g = 0; g < ab.images().size(); ++g)
    sum += fox_derivative(r, g, ab) * binomial(ab.image(g));
  return sum - binomial(ab.apply(r));
}

CheckResult pyramid_reproduction() {
  CheckResult res{"1", "pyramid reproduction", false, ""};
  const Polytope p = convex_hull(kPyramidPoints);
  const auto fs = facets(p);
  const ExactCovector centroid = vertex_centroid(p);
  const auto sys = dual_cones(p);
  const auto rays = ray_union(sys.cones);
  const auto counts = generator_counts(sys.cones);
  std::set<ExactVector> normals;
  for (const auto& f : fs) normals.insert(f.outward_normal);
  const auto expected_cones = load_example("cc-two-component-link").expected_cones;

  std::vector<std::string> failures;
  if (p.vertex_count() != 5) failures.push_back("vertex count " + std::to_string(p.vertex_count()));
  if (fs.size() != 5) failures.push_back("facet count " + std::to_string(fs.size()));
  if (normals != oracle::facet_normals(kPyramidPoints)) failures.push_back("facet normals differ from oracle");
  if (centroid != ExactCovector{Rational(2, 5), Rational(3, 5), Rational(3, 5)})
    failures.push_back("centroid " + centroid.str());
  if (sys.cones.size() != 5) failures.push_back("cone count " + std::to_string(sys.cones.size()));
  if (rays != kPyramidRays) failures.push_back("ray union {" + join(rays) + "}");
  if (counts != std::vector<std::size_t>{3, 3, 3, 3, 4})
    failures.push_back("generator counts " + counts_str(counts));
  if (!expected_cones || cone_ray_sets(*expected_cones) != cone_ray_sets(sys.cones))
    failures.push_back("cones differ from the stored cone system");
  res.passed = failures.empty();
  if (res.passed) {
    res.detail = "5 vertices, 5 facets, centroid " + centroid.str() + ", 5 cones with generator counts " +
                 counts_str(counts) + ", rays {" + join(rays) + "}";
  } else {
    for (const auto& f : failures) res.detail += (res.detail.empty() ? "" : "; ") + f;
  }
  return res;
}

CheckResult pyramid_duality_bridge() {
  CheckResult res{"2", "duality bridge on the pyramid", false, ""};
  const Polytope p = convex_hull(kPyramidPoints);
  const auto mismatch = duality_bridge_mismatch(p);
  res.passed = !mismatch;
  res.detail = mismatch ? *mismatch
                        : std::to_string(ball_facet_cones(p).size()) +
                              " unit-ball facet cones equal the dual cones";
  return res;
}

CheckResult pyramid_fan_axioms(const FanCheckOptions& fan) {
  CheckResult res{"3", "fan axioms on the pyramid", false, ""};
  const FanReport r = fan_check(dual_cones(convex_hull(kPyramidPoints)), fan);
  res.passed = r.covers && r.disjoint && r.samples == fan.samples;
  res.detail = fan_summary(r);
  return res;
}

CheckResult translation_invariance(std::uint64_t seed, std::size_t trials) {
  CheckResult res{"4", "translation invariance of dual cones", true, ""};
  Sampler rng(seed);
  const Polytope p = convex_hull(kPyramidPoints);
  const auto base = dual_cones(p);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto w = rng.integer_coords<CohomologyTag>(3, 50);
    const auto moved = dual_cones(translate(p, w));
    bool same = moved.cones.size() == base.cones.size();
    for (std::size_t i = 0; same && i < base.cones.size(); ++i)
      same = moved.cones[i].generators() == base.cones[i].generators() &&
             moved.cones[i].label() == base.cones[i].label();
    if (!same) {
      res.passed = false;
      res.detail = "cones change under translation by " + w.str();
      return res;
    }
  }
  res.detail = std::to_string(trials) + " integer translates give identical cones";
  return res;
}

CheckResult seminorm_axioms(std::uint64_t seed, std::size_t trials) {
  CheckResult res{"5", "seminorm axioms for y_t and y", true, ""};
  Sampler rng(seed);
  const Polytope p = convex_hull(kPyramidPoints);
  const Polytope pc = centered(p);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = rng.rational_coords<HomologyTag>(3);
    const auto b = rng.rational_coords<HomologyTag>(3);
    const Rational lambda = rng.positive();
    std::string broken;
    if (y_t(p, lambda * a) != lambda * y_t(p, a)) broken = "y_t homogeneity";
    else if (y_t(p, a + b) > y_t(p, a) + y_t(p, b)) broken = "y_t subadditivity";
    else if (y_seminorm(pc, lambda * a) != lambda * y_seminorm(pc, a)) broken = "y homogeneity";
    else if (y_seminorm(pc, a + b) > y_seminorm(pc, a) + y_seminorm(pc, b)) broken = "y subadditivity";
    if (!broken.empty()) {
      res.passed = false;
      res.detail = broken + " fails at a=" + a.str() + " b=" + b.str() + " lambda=" + lambda.str();
      return res;
    }
  }
  res.detail = std::to_string(trials) + " random rational triples (a, b, lambda)";
  return res;
}

CheckResult hull_oracle_equivalence(std::uint64_t seed, std::size_t trials) {
  CheckResult res{"6", "hull agrees with the extreme-point oracle", true, ""};
  Sampler rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto d = static_cast<std::size_t>(rng.integer(1, 3));
    const auto n = static_cast<std::size_t>(rng.integer(1, 12));
    std::vector<ExactCovector> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.integer_coords<CohomologyTag>(d, 4));
    const auto hull = convex_hull(pts).vertices();
    const auto expected = oracle::extreme_points(pts);
    if (hull != expected) {
      res.passed = false;
      res.detail = "points {" + join(pts) + "}: hull {" + join(hull) + "} vs oracle {" +
                   join(expected) + "}";
      return res;
    }
  }
  res.detail = std::to_string(trials) + " random point sets";
  return res;
}

CheckResult membership_coherence(std::uint64_t seed, std::size_t trials) {
  CheckResult res{"7", "cone membership matches the argmax vertex", true, ""};
  Sampler rng(seed);
  const Polytope p = convex_hull(kPyramidPoints);
  const auto sys = dual_cones(p);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = rng.integer_coords<HomologyTag>(3, 100);
    const auto arg = extremal_vertex_for(p, a);
    for (const auto& c : sys.cones) {
      const bool interior = membership(c, a) == Membership::interior;
      const bool is_arg = arg && *arg == c.label();
      if (interior != is_arg) {
        res.passed = false;
        res.detail = "a=" + a.str() + " cone " + std::to_string(c.label());
        return res;
      }
    }
  }
  res.detail = std::to_string(trials) + " random integer functionals";
  return res;
}

CheckResult fox_calculus(std::uint64_t seed) {
  CheckResult res{"8", "Fox calculus", false, ""};
  Sampler rng(seed);
  std::vector<std::string> failures;
  {
    const GroupPresentation unknot(1, {});
    const AbelianizationMap ab(unknot, {{1}});
    const auto delta = alexander_polynomial(unknot, ab);
    if (delta != LaurentPolynomial::constant(1, 1)) failures.push_back("unknot gives " + delta.str());
  }
  std::size_t presentations = 0;
  for (const auto& name : example_names()) {
    if (example_source(name).find("generators:") == std::string::npos) continue;
    ++presentations;
    if (auto m = presentation_mismatch(name, rng)) failures.push_back(*m);
  }
  res.passed = failures.empty();
  if (res.passed) {
    res.detail = "unknot 1, trefoil " + reference_polynomial("trefoil").str() + ", figure-eight " +
                 reference_polynomial("figure-eight").str() + "; identity, symmetry and minors checked on " +
                 std::to_string(presentations) + " presentations";
  } else {
    for (const auto& f : failures) res.detail += (res.detail.empty() ? "" : "; ") + f;
  }
  return res;
}

CheckResult pretzel_consistency(const FanCheckOptions& fan) {
  CheckResult res{"9", "pretzel self-consistency", false, ""};
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  for (const std::string name : {"pretzel-2-2-2", "pretzel-2-4-2"}) {
    const NamedExample ex = load_example(name);
    if (!ex.polynomial || *ex.polynomial != reference_polynomial(name))
      failures.push_back(name + ": polynomial differs from reference");
    if (!ex.polytope.full_dimensional()) {
      failures.push_back(name + ": polytope is not full-dimensional");
      continue;
    }
    const FanReport r = fan_check(dual_cones(ex.polytope), fan);
    if (!r.covers || !r.disjoint) failures.push_back(name + ": fan check " + fan_summary(r));
    if (auto m = duality_bridge_mismatch(ex.polytope)) failures.push_back(name + ": " + *m);
    notes.push_back(name + " " + std::to_string(ex.polytope.vertex_count()) + " vertices");
  }
  res.passed = failures.empty();
  if (res.passed) {
    for (const auto& n : notes) res.detail += (res.detail.empty() ? "" : ", ") + n;
    res.detail += "; fan check and duality bridge hold";
  } else {
    for (const auto& f : failures) res.detail += (res.detail.empty() ? "" : "; ") + f;
  }
  return res;
}

std::vector<CheckResult> primary_suite(const SuiteOptions& options) {
  const auto guard = [](const char* id, const char* title, auto&& run) {
    try {
      return run();
    } catch (const std::exception& e) {
      return CheckResult{id, title, false, std::string("error: ") + e.what()};
    }
  };
  return {
      guard("1", "pyramid reproduction", [] { return pyramid_reproduction(); }),
      guard("2", "duality bridge on the pyramid", [] { return pyramid_duality_bridge(); }),
      guard("3", "fan axioms on the pyramid", [&] { return pyramid_fan_axioms(options.fan); }),
      guard("4", "translation invariance of dual cones",
            [&] { return translation_invariance(options.seed); }),
      guard("5", "seminorm axioms for y_t and y", [&] { return seminorm_axioms(options.seed); }),
      guard("6", "hull agrees with the extreme-point oracle",
            [&] { return hull_oracle_equivalence(options.seed); }),
      guard("7", "cone membership matches the argmax vertex",
            [&] { return membership_coherence(options.seed); }),
      guard("8", "Fox calculus", [&] { return fox_calculus(options.seed); }),
      guard("9", "pretzel self-consistency", [&] { return pretzel_consistency(options.fan); }),
  };
}

Section example_section(const NamedExample& ex, const FanCheckOptions& fan) {
  Section s;
  s.title = "example " + ex.name;
  const Polytope& p = ex.polytope;
  s.facts.emplace_back("provenance", to_string(ex.provenance));
  if (ex.polynomial) s.facts.emplace_back("polynomial", ex.polynomial->str());
  s.facts.emplace_back("ambient dim", std::to_string(p.ambient_dim()));
  s.facts.emplace_back("affine dim", std::to_string(p.affine_dim()));
  s.facts.emplace_back("vertices", join(p.vertices()));
  s.facts.emplace_back("centroid", vertex_centroid(p).str());
  if (p.full_dimensional()) s.facts.emplace_back("facets", std::to_string(facets(p).size()));
  const auto sys = dual_cones(p);
  s.facts.emplace_back("cones", std::to_string(sys.cones.size()));
  s.facts.emplace_back("generators per cone", counts_str(generator_counts(sys.cones)));
  s.facts.emplace_back("rays", join(ray_union(sys.cones)));
  if (!ex.labels.empty()) {
    const auto fol = foliation_cones(ex.labels);
    s.facts.emplace_back("foliation cones", std::to_string(fol.cones.size()));
  }
  for (const auto& [k, v] : ex.aliases) s.facts.emplace_back("alias " + k, v.str());

  const FanReport r = fan_check(sys, fan);
  s.checks.push_back({"fan", "dual cones form a complete fan", r.covers && r.disjoint, fan_summary(r)});
  if (p.full_dimensional()) {
    const auto m = duality_bridge_mismatch(p);
    s.checks.push_back({"bridge", "unit-ball facet cones equal the dual cones", !m,
                        m ? *m : std::string("exact ray-set equality")});
  }
  if (ex.expected_cones) {
    const bool match = cone_ray_sets(*ex.expected_cones) == cone_ray_sets(sys.cones);
    s.checks.push_back({"rays", "dual cones match the stored cone system", match,
                        match ? "ray set match" : "ray sets differ"});
  }
  if (ex.labels.warning)
    s.checks.push_back({"labels", "labels consistent with the L-space reading", false,
                        ex.labels.warning_message});
  if (ex.provenance == Provenance::paper) {
    const std::string text = io::to_json(p, &ex.labels).dump();
    const io::PolytopeFile back = io::parse_polytope_file(text);
    const bool same = convex_hull(back.points) == p && back.labels && *back.labels == ex.labels &&
                      io::to_json(convex_hull(back.points), &*back.labels).dump() == text;
    s.checks.push_back({"roundtrip", "serialization round-trips exactly", same, ""});
  }
  return s;
}

Report full_report(const std::vector<std::string>& names, const SuiteOptions& options) {
  Report report;
  const std::vector<std::string>& which = names.empty() ? example_names() : names;
  for (const auto& n : which) report.sections.push_back(example_section(load_example(n), options.fan));
  Section suite;
  suite.title = "primary acceptance suite";
  suite.facts.emplace_back("seed", std::to_string(options.seed));
  suite.facts.emplace_back("fan samples", std::to_string(options.fan.samples));
  suite.checks = primary_suite(options);
  report.sections.push_back(std::move(suite));
  return report;
}

}  // namespace sfpoly::verify
