#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sfpoly/laurent.hpp"
#include "sfpoly/polytope.hpp"

namespace sfpoly {

struct Letter {
  std::size_t generator = 0;  // 0-based
  int sign = 1;               // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in a free group.  The constructor does not reduce; call reduced().
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);

  /// Whitespace-separated tokens `x1`, `x2^-1` (1-based generator names).
  /// The empty string is the identity.
  static FreeWord parse(const std::string& text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord reduced() const;
  /// Freely and cyclically reduced.
  FreeWord cyclically_reduced() const;
  FreeWord inverse() const;
  std::string str() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// <x1..xn | r1..rm>; relators are stored cyclically reduced.
class GroupPresentation {
 public:
  GroupPresentation(std::size_t generator_count, std::vector<FreeWord> relators);

  std::size_t generator_count() const { return generators_; }
  const std::vector<FreeWord>& relators() const { return relators_; }
  long deficiency() const {
    return static_cast<long>(generators_) - static_cast<long>(relators_.size());
  }

 private:
  std::size_t generators_;
  std::vector<FreeWord> relators_;
};

/// Homomorphism from the free group onto Z^b that kills every relator.
class AbelianizationMap {
 public:
  /// Throws DomainError when an image has the wrong length or a relator survives.
  AbelianizationMap(const GroupPresentation& pr, std::vector<Exponent> images);

  std::size_t rank() const { return rank_; }
  const std::vector<Exponent>& images() const { return images_; }
  const Exponent& image(std::size_t generator) const { return images_.at(generator); }
  Exponent apply(const FreeWord& w) const;

 private:
  std::size_t rank_;
  std::vector<Exponent> images_;
};

/// Image of the Fox derivative d w / d x_g in Z[Z^b].
LaurentPolynomial fox_derivative(const FreeWord& w, std::size_t g, const AbelianizationMap& ab);

using LaurentMatrix = std::vector<std::vector<LaurentPolynomial>>;

/// Entry (i, j) is d r_i / d x_j.
LaurentMatrix alexander_matrix(const GroupPresentation& pr, const AbelianizationMap& ab);

/// Normalized Alexander polynomial of a deficiency-one presentation.
///
/// For a column j with ab(x_j) != 0, det(A with column j deleted) equals
/// Delta * (t^{ab(x_j)} - 1) when b >= 2 and Delta * (t^{ab(x_j)} - 1) / (t - 1)
/// when b = 1.  Every such column is computed and the results must agree;
/// columns with ab(x_j) = 0 must give a zero minor.
LaurentPolynomial alexander_polynomial(const GroupPresentation& pr, const AbelianizationMap& ab);

/// Hull of the exponent vectors; throws DomainError on the zero polynomial.
Polytope newton_polytope(const LaurentPolynomial& f);

/// rank = |coefficient| at each exponent; is_exactly_z iff lspace and |c| == 1.
/// With lspace set, any |c| > 1 raises the warning flag.
LabeledSupport labeled_support(const LaurentPolynomial& f, bool lspace);

/// Presentation text format:
///   generators: n
///   abelianization: b
///   n lines of b integers
///   one relator per remaining non-empty line ('#' starts a comment)
struct PresentationData {
  GroupPresentation presentation;
  AbelianizationMap abelianization;
};

PresentationData parse_presentation(const std::string& text);

}  // namespace sfpoly
