#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sfpoly/cones.hpp"
#include "sfpoly/errors.hpp"
#include "sfpoly/laurent.hpp"
#include "sfpoly/polytope.hpp"

namespace sfpoly {

enum class Provenance { paper, derived };
const char* to_string(Provenance p);

struct NamedExample {
  std::string name;
  std::string description;
  Polytope polytope;
  LabeledSupport labels;
  std::optional<std::vector<PolyhedralCone>> expected_cones;
  Provenance provenance = Provenance::paper;
  /// Group presentation the polytope is computed from (derived examples).
  std::optional<std::string> presentation;
  std::optional<LaurentPolynomial> polynomial;
  /// Named vectors in H_2, e.g. "e0" = -(e1 + e2 + e3) for the pyramid.
  std::map<std::string, ExactVector> aliases;
};

class UnknownExample : public DomainError {
 public:
  explicit UnknownExample(const std::string& name);
};

/// Registered names in registration order.
const std::vector<std::string>& example_names();

NamedExample load_example(const std::string& name);

/// Embedded source text: polytope JSON for Provenance::paper examples, presentation text
/// for derived ones.
const std::string& example_source(const std::string& name);

}  // namespace sfpoly
