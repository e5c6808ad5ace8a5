#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfpoly/errors.hpp"
#include "sfpoly/rational.hpp"

namespace sfpoly {

/// Coordinates in H_2(M, dM): the space where classes alpha and the cones live.
struct HomologyTag {};
/// Coordinates in H^2(M, dM): the space where the polytope lives.
struct CohomologyTag {};

template <class Tag>
struct DualSpace;
template <>
struct DualSpace<HomologyTag> {
  using type = CohomologyTag;
};
template <>
struct DualSpace<CohomologyTag> {
  using type = HomologyTag;
};
template <class Tag>
using DualTag = typename DualSpace<Tag>::type;

/// A rational coordinate tuple tagged with the space it lives in.  Vectors and
/// covectors share this representation but are distinct types; the only
/// operation crossing them is `pairing`.
template <class Tag>
class Coords {
 public:
  using tag = Tag;

  Coords() = default;
  explicit Coords(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Coords(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Coords zero(std::size_t dim) { return Coords(std::vector<Rational>(dim)); }
  static Coords unit(std::size_t dim, std::size_t i) {
    auto c = zero(dim);
    c.coords_.at(i) = 1;
    return c;
  }
  /// Reinterprets raw coordinates from another space.
  template <class Other>
  static Coords from(const Coords<Other>& other) {
    return Coords(other.coords());
  }

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  Coords& operator+=(const Coords& rhs) {
    check_dim(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
  }
  Coords& operator-=(const Coords& rhs) {
    check_dim(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
  }
  Coords& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }
  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator*(const Rational& s, Coords a) { return a *= s; }
  friend Coords operator*(Coords a, const Rational& s) { return a *= s; }
  Coords operator-() const {
    Coords r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
  }

  friend bool operator==(const Coords&, const Coords&) = default;
  /// Lexicographic order (shorter tuples first on a common prefix).
  friend std::strong_ordering operator<=>(const Coords& a, const Coords& b) {
    const std::size_t n = std::min(a.coords_.size(), b.coords_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
    }
    return a.coords_.size() <=> b.coords_.size();
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ", ";
      s += coords_[i].str();
    }
    return s + ")";
  }

 private:
  void check_dim(const Coords& rhs) const {
    if (rhs.dim() != dim()) throw DimensionMismatch(dim(), rhs.dim());
  }

  std::vector<Rational> coords_;
};

using ExactVector = Coords<HomologyTag>;
using ExactCovector = Coords<CohomologyTag>;

/// Evaluation pairing <c, a> between H^2 and H_2.
Rational pairing(const ExactCovector& c, const ExactVector& a);

/// Same sum for any pair of dual spaces.
template <class Tag>
Rational evaluate(const Coords<DualTag<Tag>>& c, const Coords<Tag>& a) {
  if (c.dim() != a.dim()) throw DimensionMismatch(c.dim(), a.dim());
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i) s += c[i] * a[i];
  return s;
}

/// Dense rational matrix stored by rows.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  /// All rows must have length `cols`.
  ExactMatrix(std::vector<std::vector<Rational>> rows, std::size_t cols);
  template <class Tag>
  static ExactMatrix from_rows(std::span<const Coords<Tag>> rows, std::size_t cols) {
    std::vector<std::vector<Rational>> r;
    r.reserve(rows.size());
    for (const auto& row : rows) r.push_back(row.coords());
    return ExactMatrix(std::move(r), cols);
  }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }
  const std::vector<Rational>& row(std::size_t i) const { return rows_[i]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

  ExactMatrix transpose() const;
  std::vector<Rational> apply(std::span<const Rational> x) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::vector<std::vector<Rational>> rows_;
  std::size_t cols_ = 0;
};

/// Rank over Q by exact Gaussian elimination.
std::size_t rank(const ExactMatrix& m);

/// One exact solution of m x = b, or nullopt when inconsistent.  Free variables
/// are set to zero, so the answer is deterministic.
std::optional<std::vector<Rational>> solve(const ExactMatrix& m, std::span<const Rational> b);

/// Typed convenience overload: solution coordinates are returned as an ExactVector.
std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b);

/// Basis of {x : m x = 0}, one vector per free column of the reduced row echelon form.
std::vector<std::vector<Rational>> nullspace(const ExactMatrix& m);

/// Scales to coprime integer coordinates, keeping the direction (so the sign is preserved).
/// The zero tuple is returned unchanged.
std::vector<Rational> primitive(std::span<const Rational> v);

template <class Tag>
Coords<Tag> primitive(const Coords<Tag>& v) {
  return Coords<Tag>(primitive(std::span<const Rational>(v.coords())));
}

}  // namespace sfpoly
