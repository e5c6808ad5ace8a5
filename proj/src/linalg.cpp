#include "sfpoly/linalg.hpp"

#include <utility>

namespace sfpoly {

namespace {

struct Echelon {
  std::vector<std::vector<Rational>> rows;  // reduced row echelon form
  std::vector<std::size_t> pivots;          // pivot column of each nonzero row
};

// Gauss-Jordan elimination on an augmented copy; `cols` limits pivot search.
Echelon reduce(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < rows[i].size(); ++k) rows[i][k] -= f * rows[r][k];
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rows = std::move(rows);
  return e;
}

}  // namespace

Rational pairing(const ExactCovector& c, const ExactVector& a) { return evaluate(c, a); }

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows, std::vector<Rational>(cols)), cols_(cols) {}

ExactMatrix::ExactMatrix(std::vector<std::vector<Rational>> rows, std::size_t cols)
    : rows_(std::move(rows)), cols_(cols) {
  for (const auto& r : rows_)
    if (r.size() != cols_) throw DimensionMismatch(cols_, r.size());
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
  return t;
}

std::vector<Rational> ExactMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionMismatch(cols_, x.size());
  std::vector<Rational> y(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += rows_[i][j] * x[j];
  return y;
}

std::size_t rank(const ExactMatrix& m) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < m.row_count(); ++i) rows.push_back(m.row(i));
  return reduce(std::move(rows), m.col_count()).pivots.size();
}

std::optional<std::vector<Rational>> solve(const ExactMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.row_count()) throw DimensionMismatch(m.row_count(), b.size());
  const std::size_t n = m.col_count();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < m.row_count(); ++i) {
    auto r = m.row(i);
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  const Echelon e = reduce(std::move(rows), n);
  // Any row below the pivots with a nonzero right-hand side is 0 = c.
  for (std::size_t i = e.pivots.size(); i < e.rows.size(); ++i)
    if (!e.rows[i][n].is_zero()) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rows[i][n];
  return x;
}

std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b) {
  auto x = solve(m, std::span<const Rational>(b.coords()));
  if (!x) return std::nullopt;
  return ExactVector(std::move(*x));
}

std::vector<std::vector<Rational>> nullspace(const ExactMatrix& m) {
  const std::size_t n = m.col_count();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < m.row_count(); ++i) rows.push_back(m.row(i));
  const Echelon e = reduce(std::move(rows), n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> primitive(std::span<const Rational> v) {
  BigInt lcm_den = 1;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    BigInt d = x.denominator();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
  }
  BigInt g = 0;
  std::vector<BigInt> ints;
  ints.reserve(v.size());
  for (const auto& x : v) {
    BigInt k = x.numerator() * (lcm_den / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    ints.push_back(std::move(k));
  }
  std::vector<Rational> out;
  out.reserve(v.size());
  if (g == 0) return {v.begin(), v.end()};
  for (const auto& k : ints) out.emplace_back(BigInt(k / g));
  return out;
}

}  // namespace sfpoly
