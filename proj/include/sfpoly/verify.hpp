#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sfpoly/cones.hpp"
#include "sfpoly/corpus.hpp"
#include "sfpoly/foxcalc.hpp"

namespace sfpoly::verify {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
};

/// One block of a verification report: facts (printed as key: value) and checks.
struct Section {
  std::string title;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct Report {
  std::vector<Section> sections;
  bool passed() const;
  std::string text() const;
  nlohmann::json json() const;
};

/// Ray set of each cone, as a set of sorted generator lists.
std::set<std::vector<ExactVector>> cone_ray_sets(const std::vector<PolyhedralCone>& cones);
std::set<ExactVector> ray_union(const std::vector<PolyhedralCone>& cones);

/// Cones over the facets of unit_ball(centered(p)), as ray sets.
std::set<std::vector<ExactVector>> ball_facet_cones(const Polytope& p);

/// Empty when the facet cones of the unit ball equal the dual cones of p;
/// otherwise a description of the mismatch.
std::optional<std::string> duality_bridge_mismatch(const Polytope& p);

/// Sum over generators of (d r / d x_g)(t^{ab(x_g)} - 1); zero for every relator.
LaurentPolynomial fundamental_identity_residue(const FreeWord& r, const AbelianizationMap& ab);

struct SuiteOptions {
  std::uint64_t seed = 20100;
  FanCheckOptions fan;
};

// The primary criteria that run inside the library.  Criterion 10 (CLI
// determinism) needs the executable and lives in the acceptance driver.
CheckResult pyramid_reproduction();
CheckResult pyramid_duality_bridge();
CheckResult pyramid_fan_axioms(const FanCheckOptions& fan);
CheckResult translation_invariance(std::uint64_t seed, std::size_t trials = 100);
CheckResult seminorm_axioms(std::uint64_t seed, std::size_t trials = 1000);
CheckResult hull_oracle_equivalence(std::uint64_t seed, std::size_t trials = 200);
CheckResult membership_coherence(std::uint64_t seed, std::size_t trials = 1000);
CheckResult fox_calculus(std::uint64_t seed);
CheckResult pretzel_consistency(const FanCheckOptions& fan);

std::vector<CheckResult> primary_suite(const SuiteOptions& options);

/// Per-example reproduction report (facts plus consistency checks).
Section example_section(const NamedExample& ex, const FanCheckOptions& fan);

/// Example sections for `names` (all registered examples when empty), then
/// the primary suite.
Report full_report(const std::vector<std::string>& names, const SuiteOptions& options);

}  // namespace sfpoly::verify
