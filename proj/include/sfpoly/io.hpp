#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sfpoly/cones.hpp"
#include "sfpoly/laurent.hpp"
#include "sfpoly/norms.hpp"
#include "sfpoly/polytope.hpp"

namespace sfpoly::io {

using Json = nlohmann::json;

/// Accepts an integer literal or a "p/q" / "p" string.
Rational rational_from_json(const Json& j);
/// Always a string, so values round-trip exactly.
Json to_json(const Rational& r);

std::vector<Rational> rationals_from_json(const Json& j);

template <class Tag>
Json to_json(const Coords<Tag>& v) {
  Json out = Json::array();
  for (const auto& x : v.coords()) out.push_back(to_json(x));
  return out;
}

/// {"dim": d, "points": [[...], ...], "labels": [{"point": [...], "rank": n, "is_z": b}]?}
struct PolytopeFile {
  PointSet points;
  std::optional<LabeledSupport> labels;
};

PolytopeFile polytope_file_from_json(const Json& j);
PolytopeFile parse_polytope_file(const std::string& text);
Json to_json(const Polytope& p, const LabeledSupport* labels = nullptr);
Json to_json(const LabeledSupport& ls);

/// {"cones": [{"label": i, "rays": [[...]], "halfspaces": [[...]]}]}
Json to_json(const std::vector<PolyhedralCone>& cones);
Json to_json(const DualConeSystem& sys);
Json to_json(const PolyhedralCone& c);

/// Rebuilds each cone from its halfspaces and checks the stored rays agree.
std::vector<PolyhedralCone> cones_from_json(const Json& j, std::size_t dim);

/// {"components": [{"chi": -1, "n": 4, "beta": 0}, ...]}
SurfaceComplexityData surface_from_json(const Json& j);

/// {"terms": [{"exp": [..], "coef": c}]} sorted by exponent.
Json to_json(const LaurentPolynomial& f);
LaurentPolynomial polynomial_from_json(const Json& j);

Json to_json(const FacetDescription& f);
Json to_json(const Face& f);

/// Parses text as JSON, converting library errors into ParseError.
Json parse_json(const std::string& text);

}  // namespace sfpoly::io
