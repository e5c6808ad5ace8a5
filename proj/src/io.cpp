#include "sfpoly/io.hpp"

#include <algorithm>

#include "sfpoly/errors.hpp"

namespace sfpoly::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string("'") + what + "' must be an integer");
  return j.get<long>();
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("rational must be an integer or a \"p/q\" string, got " + j.dump());
}

Json to_json(const Rational& r) { return r.str(); }

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

PolytopeFile polytope_file_from_json(const Json& j) {
  const long dim = integer(field(j, "dim"), "dim");
  if (dim < 1) throw ParseError("'dim' must be positive");
  const auto d = static_cast<std::size_t>(dim);
  const Json& pts = field(j, "points");
  if (!pts.is_array()) throw ParseError("'points' must be an array");
  PolytopeFile out;
  out.points.ambient_dim = d;
  for (const auto& p : pts) {
    auto xs = rationals_from_json(p);
    if (xs.size() != d) throw DimensionMismatch(d, xs.size());
    out.points.points.emplace_back(std::move(xs));
  }
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) throw ParseError("'labels' must be an array");
    LabeledSupport ls;
    for (const auto& entry : *it) {
      auto xs = rationals_from_json(field(entry, "point"));
      if (xs.size() != d) throw DimensionMismatch(d, xs.size());
      const long rank = integer(field(entry, "rank"), "rank");
      if (rank < 0) throw ParseError("'rank' must be non-negative");
      const Json& z = field(entry, "is_z");
      if (!z.is_boolean()) throw ParseError("'is_z' must be a boolean");
      if (rank == 0) continue;
      ls.insert(ExactCovector(std::move(xs)), {static_cast<unsigned long>(rank), z.get<bool>()});
    }
    out.labels = std::move(ls);
  }
  return out;
}

PolytopeFile parse_polytope_file(const std::string& text) {
  return polytope_file_from_json(parse_json(text));
}

Json to_json(const LabeledSupport& ls) {
  Json out = Json::array();
  for (const auto& [pt, r] : ls.entries())
    out.push_back({{"point", to_json(pt)}, {"rank", r.rank}, {"is_z", r.is_exactly_z}});
  return out;
}

Json to_json(const Polytope& p, const LabeledSupport* labels) {
  Json pts = Json::array();
  for (const auto& v : p.vertices()) pts.push_back(to_json(v));
  Json out = {{"dim", p.ambient_dim()}, {"points", pts}};
  if (labels) out["labels"] = to_json(*labels);
  return out;
}

Json to_json(const PolyhedralCone& c) {
  Json rays = Json::array();
  for (const auto& g : c.generators()) rays.push_back(to_json(g));
  Json hs = Json::array();
  for (const auto& h : c.halfspaces()) hs.push_back(to_json(h));
  return {{"label", c.label()}, {"rays", rays}, {"halfspaces", hs}};
}

Json to_json(const std::vector<PolyhedralCone>& cones) {
  Json arr = Json::array();
  for (const auto& c : cones) arr.push_back(to_json(c));
  return {{"cones", arr}};
}

Json to_json(const DualConeSystem& sys) { return to_json(sys.cones); }

std::vector<PolyhedralCone> cones_from_json(const Json& j, std::size_t dim) {
  const Json& arr = field(j, "cones");
  if (!arr.is_array()) throw ParseError("'cones' must be an array");
  std::vector<PolyhedralCone> out;
  for (const auto& c : arr) {
    const long label = integer(field(c, "label"), "label");
    if (label < 0) throw ParseError("'label' must be non-negative");
    std::vector<ExactCovector> hs;
    for (const auto& h : field(c, "halfspaces")) {
      auto xs = rationals_from_json(h);
      if (xs.size() != dim) throw DimensionMismatch(dim, xs.size());
      hs.emplace_back(std::move(xs));
    }
    std::vector<ExactVector> rays;
    for (const auto& r : field(c, "rays")) {
      auto xs = rationals_from_json(r);
      if (xs.size() != dim) throw DimensionMismatch(dim, xs.size());
      rays.emplace_back(std::move(xs));
    }
    std::sort(rays.begin(), rays.end());
    auto cone = PolyhedralCone::from_halfspaces(hs, dim, static_cast<std::size_t>(label));
    if (cone.generators() != rays)
      throw ParseError("cone " + std::to_string(label) + ": rays do not match its halfspaces");
    out.push_back(std::move(cone));
  }
  return out;
}

SurfaceComplexityData surface_from_json(const Json& j) {
  const Json& arr = field(j, "components");
  if (!arr.is_array()) throw ParseError("'components' must be an array");
  SurfaceComplexityData s;
  for (const auto& c : arr) {
    SurfaceComponent comp;
    comp.euler = integer(field(c, "chi"), "chi");
    comp.suture_count = c.contains("n") ? integer(c["n"], "n") : 0;
    comp.beta_count = c.contains("beta") ? integer(c["beta"], "beta") : 0;
    if (comp.suture_count < 0 || comp.beta_count < 0)
      throw ParseError("'n' and 'beta' must be non-negative");
    s.components.push_back(comp);
  }
  return s;
}

Json to_json(const LaurentPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json coef = c.fits_slong_p() ? Json(c.get_si()) : Json(c.get_str());
    terms.push_back({{"exp", e}, {"coef", coef}});
  }
  return {{"terms", terms}};
}

LaurentPolynomial polynomial_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array() || terms.empty())
    throw ParseError("'terms' must be a non-empty array (variable count is read from it)");
  std::optional<LaurentPolynomial> f;
  for (const auto& t : terms) {
    const Json& ex = field(t, "exp");
    if (!ex.is_array()) throw ParseError("'exp' must be an array");
    Exponent e;
    for (const auto& k : ex) e.push_back(integer(k, "exp"));
    const Json& cj = field(t, "coef");
    BigInt c;
    if (cj.is_number_integer()) c = cj.get<long>();
    else if (!cj.is_string() || c.set_str(cj.get<std::string>(), 10) != 0)
      throw ParseError("'coef' must be an integer");
    if (!f) f.emplace(e.size());
    f->add_term(e, c);
  }
  return *f;
}

Json to_json(const FacetDescription& f) {
  return {{"normal", to_json(f.outward_normal)},
          {"offset", to_json(f.offset)},
          {"vertices", f.incident_vertex_indices}};
}

Json to_json(const Face& f) { return {{"vertices", f.vertex_indices}, {"dim", f.dim}}; }

}  // namespace sfpoly::io
