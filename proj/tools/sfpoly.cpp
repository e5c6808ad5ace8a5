// sfpoly: command line front end.
//
// Exit codes: 0 success, 1 domain error, 2 parse error, 3 verification mismatch.
// Errors are reported on stderr as a single JSON object.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sfpoly/corpus.hpp"
#include "sfpoly/foxcalc.hpp"
#include "sfpoly/io.hpp"
#include "sfpoly/norms.hpp"
#include "sfpoly/render.hpp"
#include "sfpoly/verify.hpp"

using namespace sfpoly;
using io::Json;

namespace {

constexpr const char* kOutputDirEnv = "SFPOLY_OUTPUT_DIR";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty entry in '" + text + "'");
    out.push_back(Rational::parse(item.substr(first, last - first + 1)));
  }
  if (out.empty()) throw ParseError("expected a comma-separated list of rationals");
  return out;
}

// Where a verb takes its polytope from: a file or a built-in example.
struct Source {
  std::string file;
  std::string example;
  bool center = false;

  void attach(CLI::App* cmd, bool with_center = true) {
    cmd->add_option("file", file, "polytope JSON file");
    cmd->add_option("--polytope,-p", file, "polytope JSON file");
    cmd->add_option("--example,-e", example, "built-in example name");
    if (with_center) cmd->add_flag("--center", center, "translate the vertex centroid to 0");
  }

  struct Loaded {
    Polytope polytope;
    std::optional<LabeledSupport> labels;
  };

  Loaded load() const {
    Loaded out;
    if (!example.empty()) {
      if (!file.empty()) throw ParseError("give either a file or --example, not both");
      NamedExample ex = load_example(example);
      out.polytope = ex.polytope;
      out.labels = ex.labels;
    } else {
      if (file.empty()) throw ParseError("no input: give a polytope file or --example");
      io::PolytopeFile pf = io::parse_polytope_file(read_file(file));
      out.polytope = convex_hull(pf.points);
      out.labels = pf.labels;
    }
    if (center) out.polytope = centered(out.polytope);
    return out;
  }
};

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string cone_line(const PolyhedralCone& c, const Polytope& p) {
  std::string s = "cone " + std::to_string(c.label()) + " at vertex " + p.vertex(c.label()).str() +
                   "\n  rays:";
  for (const auto& g : c.generators()) s += " " + g.str();
  s += "\n  halfspaces:";
  for (const auto& h : c.halfspaces()) s += " " + h.str();
  return s;
}

Json fan_json(const FanReport& r) {
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back(io::to_json(x));
  Json out = {{"covers", r.covers},   {"disjoint", r.disjoint},         {"lineality", r.lineality},
              {"samples", r.samples}, {"strict_samples", r.strict_samples}, {"witnesses", w}};
  if (r.exact_cover) out["exact_cover"] = *r.exact_cover;
  return out;
}

void print_fan(const FanReport& r) {
  std::cout << "fan check: covers=" << (r.covers ? "yes" : "no")
            << " disjoint=" << (r.disjoint ? "yes" : "no") << " samples=" << r.samples
            << " strict=" << r.strict_samples;
  if (r.exact_cover) std::cout << " exact-walls=" << (*r.exact_cover ? "yes" : "no");
  std::cout << "\n";
  for (const auto& w : r.witnesses) std::cout << "  witness " << w.str() << "\n";
}

void write_output(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path path(out);
  if (path.is_relative())
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) path = std::filesystem::path(dir) / path;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write '" + path.string() + "'");
  f << text;
  std::cerr << "wrote " << path.string() << "\n";
}

int fail(const std::string& kind, const std::string& message, Json extra = Json::object()) {
  Json err = {{"error", kind}, {"message", message}};
  for (auto it = extra.begin(); it != extra.end(); ++it) err[it.key()] = it.value();
  std::cerr << err.dump() << "\n";
  return kind == "parse" ? 2 : kind == "verification" ? 3 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sutured Floer polytopes, dual cones and Fox calculus"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output");

  // hull
  Source hull_src;
  auto* hull = app.add_subcommand("hull", "convex hull of a point set");
  hull_src.attach(hull);
  hull->add_flag("--json", json);

  // facets
  Source facets_src;
  auto* fac = app.add_subcommand("facets", "facet inequalities <v, n> <= offset");
  facets_src.attach(fac);
  fac->add_flag("--json", json);

  // dual-cones
  Source dual_src;
  bool dual_check = false;
  std::uint64_t seed = FanCheckOptions{}.seed;
  std::size_t samples = FanCheckOptions{}.samples;
  auto* dual = app.add_subcommand("dual-cones", "cone of functionals maximized at each vertex");
  dual_src.attach(dual);
  dual->add_flag("--check", dual_check, "run the fan check");
  dual->add_option("--seed", seed, "sampling seed for the fan check");
  dual->add_option("--samples", samples, "number of fan-check samples");
  dual->add_flag("--json", json);

  // foliation-cones
  Source fol_src;
  auto* fol = app.add_subcommand("foliation-cones", "dual cones at vertices labeled Z");
  fol_src.attach(fol);
  fol->add_flag("--json", json);

  // support
  Source sup_src;
  std::string sup_at;
  auto* sup = app.add_subcommand("support", "support function c(a) = min <c, a> and its face");
  sup_src.attach(sup);
  sup->add_option("--at", sup_at, "functional a, e.g. \"1,0,-1/2\"")->required();
  sup->add_flag("--json", json);

  // norm
  Source norm_src;
  std::string norm_kind = "y";
  std::string norm_at;
  std::string surface_file;
  auto* norm = app.add_subcommand("norm", "seminorms y_t, y, z or surface complexities");
  norm_src.attach(norm);
  norm->add_option("--kind", norm_kind, "y | yt | z | chi | chi-beta | chi-s")
      ->check(CLI::IsMember({"y", "yt", "z", "chi", "chi-beta", "chi-s"}));
  norm->add_option("--at", norm_at, "class a for y, yt, z");
  norm->add_option("--surface", surface_file, "surface JSON for chi, chi-beta, chi-s");
  norm->add_flag("--json", json);

  // ball
  Source ball_src;
  auto* ball = app.add_subcommand("ball", "unit ball {a : <c, a> <= 1} of a centered polytope");
  ball_src.attach(ball);
  ball->add_flag("--json", json);

  // fox
  std::string fox_file;
  bool fox_matrix = false, fox_newton = false, fox_labels = false, fox_lspace = false;
  auto* fox = app.add_subcommand("fox", "Alexander polynomial of a presentation file");
  fox->add_option("file", fox_file, "presentation file")->required();
  fox->add_flag("--matrix", fox_matrix, "print the Fox matrix");
  fox->add_flag("--newton", fox_newton, "print the Newton polytope");
  fox->add_flag("--labels", fox_labels, "print the labeled support");
  fox->add_flag("--lspace", fox_lspace, "read coefficients as sutured L-space ranks");
  fox->add_flag("--json", json);

  // verify
  std::vector<std::string> verify_examples;
  std::uint64_t verify_seed = verify::SuiteOptions{}.seed;
  std::size_t verify_samples = FanCheckOptions{}.samples;
  auto* ver = app.add_subcommand("verify", "reproduce the worked examples and run the acceptance suite");
  ver->add_option("--example,-e", verify_examples, "restrict example reports (repeatable)");
  ver->add_option("--seed", verify_seed, "seed for sampling checks");
  ver->add_option("--samples", verify_samples, "fan-check samples");
  ver->add_flag("--json", json);

  // render
  Source ren_src;
  bool ren_cones = false;
  std::string ren_along;
  double ren_radius = RenderOptions{}.radius;
  std::string ren_out;
  auto* ren = app.add_subcommand("render", "SVG of a polytope or its dual cones (dim <= 3)");
  ren_src.attach(ren);
  ren->add_flag("--cones", ren_cones, "draw the dual cone system");
  ren->add_option("--along", ren_along, "3D viewing direction \"x,y,z\" (default: drop third coordinate)");
  ren->add_option("--radius", ren_radius, "ray truncation radius");
  ren->add_option("-o,--output", ren_out,
                  std::string("output file; relative paths resolve under $") + kOutputDirEnv);
  ren->add_flag("--json", json, "wrap the SVG as {\"svg\": ...}");

  auto* list = app.add_subcommand("examples", "list built-in examples");
  list->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail("parse", e.what());
  }

  try {
    if (hull->parsed()) {
      const auto in = hull_src.load();
      const Polytope& p = in.polytope;
      if (json) {
        Json j = io::to_json(p);
        j["affine_dim"] = p.affine_dim();
        emit_json(j);
      } else {
        std::cout << "vertices: " << p.vertex_count() << "\naffine dim: " << p.affine_dim() << "\n";
        for (const auto& v : p.vertices()) std::cout << v.str() << "\n";
      }
    } else if (fac->parsed()) {
      const auto in = facets_src.load();
      const auto fs = facets(in.polytope);
      if (json) {
        Json arr = Json::array();
        for (const auto& f : fs) arr.push_back(io::to_json(f));
        emit_json({{"facets", arr}});
      } else {
        std::cout << "facets: " << fs.size() << "\n";
        for (const auto& f : fs) {
          std::cout << "normal " << f.outward_normal.str() << " offset " << f.offset.str()
                    << " vertices";
          for (auto i : f.incident_vertex_indices) std::cout << " " << i;
          std::cout << "\n";
        }
      }
    } else if (dual->parsed()) {
      const auto in = dual_src.load();
      const auto sys = dual_cones(in.polytope);
      std::optional<FanReport> report;
      if (dual_check) {
        FanCheckOptions opt;
        opt.seed = seed;
        opt.samples = samples;
        report = fan_check(sys, opt);
      }
      if (json) {
        Json j = io::to_json(sys);
        if (report) j["fan"] = fan_json(*report);
        emit_json(j);
      } else {
        for (const auto& c : sys.cones) std::cout << cone_line(c, in.polytope) << "\n";
        if (report) print_fan(*report);
      }
      if (report && !(report->covers && report->disjoint))
        return fail("verification", "dual cones do not form a complete fan");
    } else if (fol->parsed()) {
      const auto in = fol_src.load();
      if (!in.labels) throw DomainError("foliation-cones needs rank labels in the input");
      const auto set = foliation_cones(*in.labels);
      if (json) {
        emit_json(io::to_json(set.cones));
      } else {
        std::cout << "foliation cones: " << set.cones.size() << " of " << set.system.cones.size()
                  << "\n";
        for (const auto& c : set.cones) std::cout << cone_line(c, set.system.source) << "\n";
      }
    } else if (sup->parsed()) {
      const auto in = sup_src.load();
      const ExactVector a(parse_list(sup_at));
      const auto s = support_min(in.polytope, a);
      if (json) {
        emit_json({{"value", io::to_json(s.value)}, {"face", io::to_json(s.attaining_face)}});
      } else {
        std::cout << "c(a) = " << s.value.str() << "\nface (dim " << s.attaining_face.dim << "):";
        for (auto i : s.attaining_face.vertex_indices)
          std::cout << " " << in.polytope.vertex(i).str();
        std::cout << "\n";
      }
    } else if (norm->parsed()) {
      Rational value;
      if (norm_kind == "chi" || norm_kind == "chi-beta" || norm_kind == "chi-s") {
        if (surface_file.empty()) throw ParseError("--kind " + norm_kind + " needs --surface");
        const auto s = io::surface_from_json(io::parse_json(read_file(surface_file)));
        value = norm_kind == "chi" ? Rational(chi_minus(s))
                : norm_kind == "chi-beta" ? Rational(chi_beta(s))
                                          : chi_s_minus(s);
      } else {
        if (norm_at.empty()) throw ParseError("--kind " + norm_kind + " needs --at");
        const auto in = norm_src.load();
        const ExactVector a(parse_list(norm_at));
        value = norm_kind == "yt" ? y_t(in.polytope, a)
                : norm_kind == "y" ? y_seminorm(in.polytope, a)
                                   : z_symmetrized(in.polytope, a);
      }
      if (json) emit_json({{"kind", norm_kind}, {"value", io::to_json(value)}});
      else std::cout << value.str() << "\n";
    } else if (ball->parsed()) {
      const auto in = ball_src.load();
      const NormBall b = unit_ball(in.polytope);
      if (b.bounded()) {
        const auto& bp = b.polytope();
        if (json) {
          Json pts = Json::array();
          for (const auto& v : bp.vertices()) pts.push_back(io::to_json(v));
          emit_json({{"bounded", true}, {"dim", bp.ambient_dim()}, {"points", pts}});
        } else {
          std::cout << "bounded ball with " << bp.vertex_count() << " vertices\n";
          for (const auto& v : bp.vertices()) std::cout << v.str() << "\n";
        }
      } else {
        const auto& hs = b.halfspaces().normals;
        if (json) {
          Json arr = Json::array();
          for (const auto& h : hs) arr.push_back(io::to_json(h));
          emit_json({{"bounded", false}, {"halfspaces", arr}});
        } else {
          std::cout << "unbounded ball {a : <n, a> <= 1} with " << hs.size() << " halfspaces\n";
          for (const auto& h : hs) std::cout << h.str() << "\n";
        }
      }
    } else if (fox->parsed()) {
      const PresentationData data = parse_presentation(read_file(fox_file));
      const auto delta = alexander_polynomial(data.presentation, data.abelianization);
      Json j = io::to_json(delta);
      if (!json) std::cout << "alexander polynomial: " << delta.str() << "\n";
      if (fox_matrix) {
        const auto m = alexander_matrix(data.presentation, data.abelianization);
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.size(); ++i) {
          Json row = Json::array();
          for (std::size_t k = 0; k < m[i].size(); ++k) {
            row.push_back(io::to_json(m[i][k]));
            if (!json)
              std::cout << "d r" << i + 1 << " / d x" << k + 1 << " = " << m[i][k].str()
                        << "\n";
          }
          rows.push_back(row);
        }
        j["matrix"] = rows;
      }
      if (fox_newton) {
        const Polytope np = newton_polytope(delta);
        j["newton"] = io::to_json(np);
        if (!json) {
          std::cout << "newton polytope: " << np.vertex_count() << " vertices, affine dim "
                    << np.affine_dim() << "\n";
          for (const auto& v : np.vertices()) std::cout << "  " << v.str() << "\n";
        }
      }
      if (fox_labels || fox_lspace) {
        const LabeledSupport ls = labeled_support(delta, fox_lspace);
        j["labels"] = io::to_json(ls);
        j["warning"] = ls.warning ? Json(ls.warning_message) : Json(nullptr);
        if (!json) {
          for (const auto& [pt, r] : ls.entries())
            std::cout << "  " << pt.str() << " rank " << r.rank << (r.is_exactly_z ? " (Z)" : "")
                      << "\n";
          if (ls.warning) std::cout << "warning: " << ls.warning_message << "\n";
        }
      }
      if (json) emit_json(j);
    } else if (ver->parsed()) {
      verify::SuiteOptions opt;
      opt.seed = verify_seed;
      opt.fan.samples = verify_samples;
      const verify::Report report = verify::full_report(verify_examples, opt);
      if (json) emit_json(report.json());
      else std::cout << report.text();
      if (!report.passed()) return fail("verification", "verification mismatch");
    } else if (ren->parsed()) {
      const auto in = ren_src.load();
      RenderOptions opt;
      opt.radius = ren_radius;
      if (!ren_along.empty()) {
        const auto d = parse_list(ren_along);
        if (d.size() != 3) throw ParseError("--along needs three components");
        opt.along = std::array<double, 3>{d[0].to_double(), d[1].to_double(), d[2].to_double()};
      }
      const std::string svg = ren_cones ? render_svg(dual_cones(in.polytope), opt)
                                        : render_svg(in.polytope, opt);
      write_output(json ? Json({{"svg", svg}}).dump(2) + "\n" : svg, ren_out);
    } else if (list->parsed()) {
      if (json) {
        emit_json(example_names());
      } else {
        for (const auto& n : example_names()) std::cout << n << "\n";
      }
    }
  } catch (const NotFullDimensional& e) {
    return fail(e.kind(), e.what(), {{"affine_dim", e.affine_dim()}, {"ambient_dim", e.ambient_dim()}});
  } catch (const DimensionMismatch& e) {
    return fail(e.kind(), e.what(), {{"expected", e.expected()}, {"actual", e.actual()}});
  } catch (const UnknownExample& e) {
    return fail(e.kind(), e.what(), {{"registered", example_names()}});
  } catch (const Error& e) {
    return fail(e.kind(), e.what());
  } catch (const std::exception& e) {
    return fail("domain", e.what());
  }
  return 0;
}
