#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sfpoly/rational.hpp"

namespace sfpoly {

using Exponent = std::vector<long>;

/// Laurent polynomial with integer coefficients in b commuting variables,
/// i.e. an element of the group ring Z[Z^b].  Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(std::size_t variables = 1) : vars_(variables) {}

  static LaurentPolynomial monomial(const Exponent& e, const BigInt& coef = 1);
  static LaurentPolynomial constant(std::size_t variables, const BigInt& coef);

  std::size_t variables() const { return vars_; }
  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Exponent& e) const;

  /// Adds c * t^e.
  void add_term(const Exponent& e, const BigInt& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  /// Multiplies by t^e.
  LaurentPolynomial shifted(const Exponent& e) const;
  /// Substitutes t_i -> t_i^{-1}.
  LaurentPolynomial inverted() const;

  /// Exact quotient by (t^v - 1), v != 0; throws DomainError when not divisible.
  LaurentPolynomial divided_by_binomial(const Exponent& v) const;

  /// Representative up to units +-t^k: exponents shifted so every coordinate's
  /// minimum is 0, then the sign fixed so the lexicographically first
  /// coefficient is positive.
  LaurentPolynomial normalized() const;

  /// Evaluation at rational values of the variables (all nonzero).
  Rational evaluate(const std::vector<Rational>& at) const;

  /// Human-readable, e.g. "t^2 - t + 1" for one variable, "t1*t2^-1 + 3" otherwise.
  std::string str() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::size_t vars_;
  std::map<Exponent, BigInt> terms_;
};

/// Determinant of a square matrix over the group ring (Laplace expansion with
/// memoization over column subsets).  The empty matrix has determinant 1.
LaurentPolynomial determinant(const std::vector<std::vector<LaurentPolynomial>>& m,
                              std::size_t variables);

}  // namespace sfpoly
