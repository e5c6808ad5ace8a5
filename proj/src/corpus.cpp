#include "sfpoly/corpus.hpp"

#include <functional>

#include "sfpoly/foxcalc.hpp"
#include "sfpoly/io.hpp"

namespace sfpoly {

namespace {

// Vertices f2+f3, f2, f3, f1+f3, f1+f2 of the two-component link complement,
// every Spin^c structure in the support carrying Z.
const std::string kPyramid = R"({
  "dim": 3,
  "points": [[0, 1, 1], [0, 1, 0], [0, 0, 1], [1, 0, 1], [1, 1, 0]],
  "labels": [
    {"point": [0, 1, 1], "rank": 1, "is_z": true},
    {"point": [0, 1, 0], "rank": 1, "is_z": true},
    {"point": [0, 0, 1], "rank": 1, "is_z": true},
    {"point": [1, 0, 1], "rank": 1, "is_z": true},
    {"point": [1, 1, 0], "rank": 1, "is_z": true}
  ]
})";

// Labels index the lexicographically sorted vertices
// (0,0,1), (0,1,0), (0,1,1), (1,0,1), (1,1,0).
const std::string kPyramidCones = R"({
  "cones": [
    {"label": 0, "rays": [[0, 0, 1], [-1, 0, 0], [0, -1, -1]],
     "halfspaces": [[0, -1, 1], [-1, 0, 0], [0, -1, 0]]},
    {"label": 1, "rays": [[0, 1, 0], [-1, 0, 0], [0, -1, -1]],
     "halfspaces": [[0, 1, -1], [-1, 0, 0], [0, 0, -1]]},
    {"label": 2, "rays": [[0, 1, 0], [0, 0, 1], [-1, 0, 0], [1, 1, 1]],
     "halfspaces": [[0, 0, 1], [0, 1, 0], [-1, 1, 0], [-1, 0, 1]]},
    {"label": 3, "rays": [[0, 0, 1], [1, 1, 1], [0, -1, -1]],
     "halfspaces": [[1, 0, 0], [0, -1, 1], [1, -1, 0]]},
    {"label": 4, "rays": [[0, 1, 0], [1, 1, 1], [0, -1, -1]],
     "halfspaces": [[0, 1, -1], [1, 0, 0], [1, 0, -1]]}
  ]
})";

// Wirtinger presentations of the pretzel links; each generator maps to the
// meridian of its component.  The last Wirtinger relator is omitted.
const std::string kPretzel222 = R"(# pretzel link P(2,2,2), three components
generators: 6
abelianization: 3
1 0 0
1 0 0
0 1 0
0 1 0
0 0 1
0 0 1
x2 x6 x2^-1 x5^-1
x5 x2 x5^-1 x1^-1
x6^-1 x3 x6 x4^-1
x4^-1 x5 x4 x6^-1
x3 x1 x3^-1 x2^-1
)";

const std::string kPretzel242 = R"(# pretzel link P(2,4,2), three components
generators: 8
abelianization: 3
1 0 0
1 0 0
0 1 0
0 1 0
0 1 0
0 0 1
0 0 1
0 0 1
x2 x8 x2^-1 x6^-1
x6 x2 x6^-1 x1^-1
x8^-1 x3 x8 x4^-1
x4^-1 x7 x4 x8^-1
x7^-1 x4 x7 x5^-1
x5^-1 x6 x5 x7^-1
x3 x1 x3^-1 x2^-1
)";

const std::string kTrefoil = R"(# trefoil knot
generators: 2
abelianization: 1
1
1
x1 x2 x1 x2^-1 x1^-1 x2^-1
)";

const std::string kFigureEight = R"(# figure-eight knot
generators: 2
abelianization: 1
1
1
x1 x2^-1 x1^-1 x2 x1 x2^-1 x1 x2 x1^-1 x2^-1
)";

NamedExample from_polytope_json(const std::string& name, const std::string& description,
                                 const std::string& text, const std::string* cones) {
  const io::PolytopeFile file = io::parse_polytope_file(text);
  NamedExample ex;
  ex.name = name;
  ex.description = description;
  ex.polytope = convex_hull(file.points);
  if (file.labels) ex.labels = *file.labels;
  if (cones) ex.expected_cones = io::cones_from_json(io::parse_json(*cones), ex.polytope.ambient_dim());
  ex.provenance = Provenance::paper;
  return ex;
}

NamedExample from_presentation(const std::string& name, const std::string& description,
                               const std::string& text, bool lspace) {
  const PresentationData data = parse_presentation(text);
  const LaurentPolynomial delta = alexander_polynomial(data.presentation, data.abelianization);
  NamedExample ex;
  ex.name = name;
  ex.description = description;
  ex.polytope = newton_polytope(delta);
  ex.labels = labeled_support(delta, lspace);
  ex.provenance = Provenance::derived;
  ex.presentation = text;
  ex.polynomial = delta;
  return ex;
}

struct Entry {
  std::string name;
  const std::string* source;
  std::function<NamedExample()> load;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"cc-two-component-link", &kPyramid,
       [] {
         NamedExample ex = from_polytope_json(
             "cc-two-component-link",
             "Pyramid polytope of a two-component link complement with its five foliation cones",
             kPyramid, &kPyramidCones);
         ex.aliases.emplace("e0", ExactVector{-1, -1, -1});
         return ex;
       }},
      {"pretzel-2-2-2", &kPretzel222,
       [] {
         return from_presentation("pretzel-2-2-2",
                                  "Newton polytope of the pretzel link P(2,2,2) Alexander polynomial",
                                  kPretzel222, true);
       }},
      {"pretzel-2-4-2", &kPretzel242,
       [] {
         return from_presentation("pretzel-2-4-2",
                                  "Newton polytope of the pretzel link P(2,4,2) Alexander polynomial",
                                  kPretzel242, true);
       }},
      // Knot groups: Fox-calculus fixtures, ranks read without the L-space hypothesis.
      {"trefoil", &kTrefoil,
       [] { return from_presentation("trefoil", "Trefoil knot group", kTrefoil, false); }},
      {"figure-eight", &kFigureEight,
       [] {
         return from_presentation("figure-eight", "Figure-eight knot group", kFigureEight, false);
       }},
  };
  return entries;
}

const Entry& find(const std::string& name) {
  for (const auto& e : registry())
    if (e.name == name) return e;
  throw UnknownExample(name);
}

std::string joined_names() {
  std::string out;
  for (const auto& n : example_names()) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

const char* to_string(Provenance p) { return p == Provenance::paper ? "paper" : "derived"; }

UnknownExample::UnknownExample(const std::string& name)
    : DomainError("unknown example '" + name + "'; registered: " + joined_names()) {}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

NamedExample load_example(const std::string& name) { return find(name).load(); }

const std::string& example_source(const std::string& name) { return *find(name).source; }

}  // namespace sfpoly
