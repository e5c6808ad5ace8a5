#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sfpoly/corpus.hpp"
#include "sfpoly/errors.hpp"
#include "sfpoly/foxcalc.hpp"
#include "sfpoly/io.hpp"
#include "sfpoly/norms.hpp"
#include "sfpoly/verify.hpp"

namespace py = pybind11;
using namespace sfpoly;
using io::Json;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python layer turns them
// into fractions.Fraction.
using Row = std::vector<std::string>;

std::vector<Rational> parse_row(const Row& row) {
  std::vector<Rational> xs;
  for (const auto& s : row) xs.push_back(Rational::parse(s));
  return xs;
}

Polytope hull_of(const std::vector<Row>& rows) {
  PointSet ps;
  for (const auto& r : rows) ps.points.emplace_back(parse_row(r));
  ps.ambient_dim = ps.points.empty() ? 0 : ps.points.front().dim();
  return convex_hull(ps);
}

ExactVector vector_of(const Row& row) { return ExactVector(parse_row(row)); }

py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_py(x));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
  }
}

SurfaceComplexityData surface_of(const std::vector<std::tuple<long, long, long>>& cs) {
  SurfaceComplexityData s;
  for (const auto& [chi, n, beta] : cs) {
    if (n < 0 || beta < 0) throw DomainError("suture and beta counts must be non-negative");
    s.components.push_back({chi, n, beta});
  }
  return s;
}

Json fan_json(const FanReport& r) {
  Json w = Json::array();
  for (const auto& v : r.witnesses) w.push_back(io::to_json(v));
  Json out = {{"covers", r.covers}, {"disjoint", r.disjoint}, {"lineality", r.lineality},
              {"samples", r.samples}, {"strict_samples", r.strict_samples}, {"witnesses", w}};
  out["exact_cover"] = r.exact_cover ? Json(*r.exact_cover) : Json(nullptr);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact polytope, cone and Fox-calculus routines";

  static py::exception<Error> base(m, "Error", PyExc_ValueError);
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse, e.what());
    } catch (const DomainError& e) {
      py::set_error(domain, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("hull", [](const std::vector<Row>& pts) {
    const Polytope p = hull_of(pts);
    Json j = io::to_json(p);
    j["affine_dim"] = p.affine_dim();
    return to_py(j);
  });
  m.def("facets", [](const std::vector<Row>& pts) {
    Json arr = Json::array();
    for (const auto& f : facets(hull_of(pts))) arr.push_back(io::to_json(f));
    return to_py(arr);
  });
  m.def("centered", [](const std::vector<Row>& pts) { return to_py(io::to_json(centered(hull_of(pts)))); });
  m.def("dual_cones", [](const std::vector<Row>& pts) { return to_py(io::to_json(dual_cones(hull_of(pts)))); });
  m.def(
      "fan_check",
      [](const std::vector<Row>& pts, std::uint64_t seed, std::size_t samples) {
        FanCheckOptions opt;
        opt.seed = seed;
        opt.samples = samples;
        return to_py(fan_json(fan_check(dual_cones(hull_of(pts)), opt)));
      },
      py::arg("points"), py::arg("seed") = 20100, py::arg("samples") = 10000);
  m.def("support_min", [](const std::vector<Row>& pts, const Row& a) {
    const auto s = support_min(hull_of(pts), vector_of(a));
    return to_py({{"value", io::to_json(s.value)}, {"face", io::to_json(s.attaining_face)}});
  });
  m.def("y_t", [](const std::vector<Row>& pts, const Row& a) { return y_t(hull_of(pts), vector_of(a)).str(); });
  m.def("y", [](const std::vector<Row>& pts, const Row& a) { return y_seminorm(hull_of(pts), vector_of(a)).str(); });
  m.def("z", [](const std::vector<Row>& pts, const Row& a) { return z_symmetrized(hull_of(pts), vector_of(a)).str(); });
  m.def("unit_ball", [](const std::vector<Row>& pts) {
    const NormBall b = unit_ball(hull_of(pts));
    Json j = {{"bounded", b.bounded()}};
    Json arr = Json::array();
    if (b.bounded()) {
      for (const auto& v : b.polytope().vertices()) arr.push_back(io::to_json(v));
      j["points"] = arr;
    } else {
      for (const auto& n : b.halfspaces().normals) arr.push_back(io::to_json(n));
      j["normals"] = arr;
    }
    return to_py(j);
  });
  m.def("chi_minus", [](const std::vector<std::tuple<long, long, long>>& s) { return chi_minus(surface_of(s)); });
  m.def("chi_beta", [](const std::vector<std::tuple<long, long, long>>& s) { return chi_beta(surface_of(s)); });
  m.def("chi_s_minus",
        [](const std::vector<std::tuple<long, long, long>>& s) { return chi_s_minus(surface_of(s)).str(); });

  m.def(
      "fox",
      [](const std::string& text, bool lspace) {
        const auto data = parse_presentation(text);
        const auto delta = alexander_polynomial(data.presentation, data.abelianization);
        const auto labels = labeled_support(delta, lspace);
        Json j = io::to_json(delta);
        j["str"] = delta.str();
        j["newton"] = io::to_json(newton_polytope(delta), &labels);
        j["warning"] = labels.warning;
        return to_py(j);
      },
      py::arg("text"), py::arg("lspace") = false);

  m.def("example_names", &example_names);
  m.def("example_source", &example_source);
  m.def("load_example", [](const std::string& name) {
    const auto ex = load_example(name);
    Json j = {{"name", ex.name},
              {"description", ex.description},
              {"provenance", to_string(ex.provenance)},
              {"polytope", io::to_json(ex.polytope, &ex.labels)}};
    if (ex.expected_cones) j["expected_cones"] = io::to_json(*ex.expected_cones);
    if (ex.polynomial) j["polynomial"] = io::to_json(*ex.polynomial);
    if (ex.presentation) j["presentation"] = *ex.presentation;
    Json aliases = Json::object();
    for (const auto& [k, v] : ex.aliases) aliases[k] = io::to_json(v);
    j["aliases"] = aliases;
    return to_py(j);
  });

  m.def(
      "verify",
      [](const std::vector<std::string>& names, std::uint64_t seed) {
        verify::SuiteOptions opt;
        opt.seed = seed;
        const auto report = verify::full_report(names, opt);
        return py::make_tuple(report.passed(), report.text());
      },
      py::arg("names") = std::vector<std::string>{}, py::arg("seed") = 20100);
}
