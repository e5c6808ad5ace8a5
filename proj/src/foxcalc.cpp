#include "sfpoly/foxcalc.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "sfpoly/errors.hpp"

namespace sfpoly {

namespace {

bool cancels(const Letter& a, const Letter& b) {
  return a.generator == b.generator && a.sign == -b.sign;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_zero(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](long k) { return k == 0; });
}

long parse_long(const std::string& token, const std::string& what) {
  if (token.empty()) throw ParseError("expected an integer for " + what);
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + token + "' for " + what);
  }
  if (used != token.size()) throw ParseError("bad integer '" + token + "' for " + what);
  return value;
}

}  // namespace

FreeWord::FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_)
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
}

FreeWord FreeWord::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<Letter> letters;
  std::string token;
  while (in >> token) {
    int sign = 1;
    std::string name = token;
    if (const auto caret = token.find('^'); caret != std::string::npos) {
      const std::string power = token.substr(caret + 1);
      if (power == "-1") sign = -1;
      else if (power != "1") throw ParseError("unsupported exponent in token '" + token + "'");
      name = token.substr(0, caret);
    }
    if (name.size() < 2 || name[0] != 'x' ||
        !std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("bad generator token '" + token + "' (expected x<k> or x<k>^-1)");
    const long index = parse_long(name.substr(1), "generator index");
    if (index < 1) throw ParseError("generator indices start at 1: '" + token + "'");
    letters.push_back({static_cast<std::size_t>(index - 1), sign});
  }
  return FreeWord(std::move(letters));
}

FreeWord FreeWord::reduced() const {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (!out.empty() && cancels(out.back(), l)) out.pop_back();
    else out.push_back(l);
  }
  return FreeWord(std::move(out));
}

FreeWord FreeWord::cyclically_reduced() const {
  std::vector<Letter> w = reduced().letters_;
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && cancels(w[lo], w[hi - 1])) {
    ++lo;
    --hi;
  }
  return FreeWord(std::vector<Letter>(w.begin() + lo, w.begin() + hi));
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.sign = -l.sign;
  return FreeWord(std::move(out));
}

std::string FreeWord::str() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(l.generator + 1);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(std::move(out));
}

GroupPresentation::GroupPresentation(std::size_t generator_count, std::vector<FreeWord> relators)
    : generators_(generator_count) {
  if (generator_count == 0) throw DomainError("a presentation needs at least one generator");
  for (const auto& r : relators) {
    for (const auto& l : r.letters())
      if (l.generator >= generator_count)
        throw DomainError("relator '" + r.str() + "' uses a generator beyond x" +
                          std::to_string(generator_count));
    relators_.push_back(r.cyclically_reduced());
  }
}

AbelianizationMap::AbelianizationMap(const GroupPresentation& pr, std::vector<Exponent> images)
    : rank_(images.empty() ? 0 : images.front().size()), images_(std::move(images)) {
  if (images_.size() != pr.generator_count())
    throw DimensionMismatch(pr.generator_count(), images_.size());
  for (const auto& im : images_)
    if (im.size() != rank_) throw DimensionMismatch(rank_, im.size());
  if (rank_ == 0) throw DomainError("abelianization must have positive rank");
  for (const auto& r : pr.relators())
    if (!is_zero(apply(r)))
      throw DomainError("relator '" + r.str() + "' does not vanish under the abelianization");
}

Exponent AbelianizationMap::apply(const FreeWord& w) const {
  Exponent e(rank_, 0);
  for (const auto& l : w.letters()) {
    const Exponent& im = images_.at(l.generator);
    for (std::size_t i = 0; i < rank_; ++i) e[i] += l.sign * im[i];
  }
  return e;
}

LaurentPolynomial fox_derivative(const FreeWord& w, std::size_t g, const AbelianizationMap& ab) {
  if (g >= ab.images().size())
    throw DomainError("generator index " + std::to_string(g) + " out of range");
  const std::size_t b = ab.rank();
  LaurentPolynomial d(b);
  Exponent prefix(b, 0);
  for (const auto& l : w.letters()) {
    const Exponent& im = ab.image(l.generator);
    if (l.sign < 0)
      for (std::size_t i = 0; i < b; ++i) prefix[i] -= im[i];
    if (l.generator == g) d.add_term(prefix, l.sign);
    if (l.sign > 0)
      for (std::size_t i = 0; i < b; ++i) prefix[i] += im[i];
  }
  return d;
}

LaurentMatrix alexander_matrix(const GroupPresentation& pr, const AbelianizationMap& ab) {
  LaurentMatrix m;
  for (const auto& r : pr.relators()) {
    std::vector<LaurentPolynomial> row;
    for (std::size_t j = 0; j < pr.generator_count(); ++j) row.push_back(fox_derivative(r, j, ab));
    m.push_back(std::move(row));
  }
  return m;
}

LaurentPolynomial alexander_polynomial(const GroupPresentation& pr, const AbelianizationMap& ab) {
  if (pr.deficiency() != 1)
    throw DomainError("alexander_polynomial needs a deficiency-one presentation (got deficiency " +
                      std::to_string(pr.deficiency()) + ")");
  const std::size_t n = pr.generator_count();
  const std::size_t b = ab.rank();
  const LaurentMatrix a = alexander_matrix(pr, ab);
  const auto minor = [&](std::size_t skip) {
    LaurentMatrix m;
    for (const auto& row : a) {
      std::vector<LaurentPolynomial> r;
      for (std::size_t j = 0; j < n; ++j)
        if (j != skip) r.push_back(row[j]);
      m.push_back(std::move(r));
    }
    return determinant(m, b);
  };

  std::optional<LaurentPolynomial> result;
  std::size_t result_column = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const LaurentPolynomial det = minor(j);
    const Exponent& v = ab.image(j);
    if (is_zero(v)) {
      if (!det.is_zero())
        throw DomainError("column " + std::to_string(j + 1) +
                          " has trivial abelian image but a nonzero minor: " + det.str());
      continue;
    }
    LaurentPolynomial delta(b);
    try {
      if (b == 1) {
        const LaurentPolynomial t_minus_1 =
            LaurentPolynomial::monomial({1}) - LaurentPolynomial::constant(1, 1);
        delta = (det * t_minus_1).divided_by_binomial(v);
      } else {
        delta = det.divided_by_binomial(v);
      }
    } catch (const DomainError&) {
      throw DomainError("minor for column " + std::to_string(j + 1) + " (" + det.str() +
                        ") is not divisible by its abelian factor");
    }
    delta = delta.normalized();
    if (!result) {
      result = delta;
      result_column = j;
    } else if (!(delta == *result)) {
      throw DomainError("column deletions disagree: column " + std::to_string(result_column + 1) +
                        " gives " + result->str() + ", column " + std::to_string(j + 1) +
                        " gives " + delta.str());
    }
  }
  if (!result) throw DomainError("every generator has trivial abelian image");
  return *result;
}

Polytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw DomainError("Newton polytope of the zero polynomial");
  std::vector<ExactCovector> pts;
  for (const auto& [e, _] : f.terms()) {
    std::vector<Rational> xs(e.begin(), e.end());
    pts.emplace_back(std::move(xs));
  }
  return convex_hull(pts);
}

LabeledSupport labeled_support(const LaurentPolynomial& f, bool lspace) {
  if (f.is_zero()) throw DomainError("labeled support of the zero polynomial");
  LabeledSupport ls;
  for (const auto& [e, c] : f.terms()) {
    const BigInt mag = abs(c);
    if (!mag.fits_ulong_p()) throw DomainError("coefficient too large for a rank label");
    const bool z = lspace && mag == 1;
    if (lspace && mag != 1 && !ls.warning) {
      ls.warning = true;
      ls.warning_message = "coefficient " + c.get_str() +
                           " has magnitude > 1, contradicting the sutured L-space hypothesis";
    }
    std::vector<Rational> xs(e.begin(), e.end());
    ls.insert(ExactCovector(std::move(xs)), {mag.get_ui(), z});
  }
  return ls;
}

PresentationData parse_presentation(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (!line.empty()) lines.push_back(line);
    }
  }
  std::size_t at = 0;
  const auto header = [&](const std::string& key) {
    if (at >= lines.size()) throw ParseError("missing '" + key + ":' line");
    const std::string& line = lines[at++];
    if (line.rfind(key + ":", 0) != 0)
      throw ParseError("expected '" + key + ": <n>', got '" + line + "'");
    return parse_long(trim(line.substr(key.size() + 1)), key);
  };
  const long n = header("generators");
  if (n < 1) throw ParseError("generators must be positive");
  const long b = header("abelianization");
  if (b < 1) throw ParseError("abelianization rank must be positive");

  std::vector<Exponent> images;
  for (long i = 0; i < n; ++i) {
    if (at >= lines.size()) throw ParseError("missing abelianization vector for x" + std::to_string(i + 1));
    std::istringstream in(lines[at++]);
    Exponent e;
    std::string tok;
    while (in >> tok) e.push_back(parse_long(tok, "abelianization entry"));
    if (e.size() != static_cast<std::size_t>(b))
      throw ParseError("abelianization vector for x" + std::to_string(i + 1) + " has " +
                       std::to_string(e.size()) + " entries, expected " + std::to_string(b));
    images.push_back(std::move(e));
  }
  std::vector<FreeWord> relators;
  for (; at < lines.size(); ++at) relators.push_back(FreeWord::parse(lines[at]));

  GroupPresentation pr(static_cast<std::size_t>(n), std::move(relators));
  AbelianizationMap ab(pr, std::move(images));
  return {std::move(pr), std::move(ab)};
}

}  // namespace sfpoly
