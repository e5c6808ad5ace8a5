#include "sfpoly/laurent.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "sfpoly/errors.hpp"

namespace sfpoly {

namespace {

void check_vars(std::size_t expected, std::size_t actual) {
  if (expected != actual) throw DimensionMismatch(expected, actual);
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

long dot(const Exponent& a, const Exponent& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::monomial(const Exponent& e, const BigInt& coef) {
  LaurentPolynomial p(e.size());
  p.add_term(e, coef);
  return p;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t variables, const BigInt& coef) {
  return monomial(Exponent(variables, 0), coef);
}

BigInt LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponent& e, const BigInt& c) {
  check_vars(vars_, e.size());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  check_vars(vars_, rhs.vars_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  check_vars(vars_, rhs.vars_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  check_vars(a.vars_, b.vars_);
  LaurentPolynomial r(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add(ea, eb), ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& e) const {
  check_vars(vars_, e.size());
  LaurentPolynomial r(vars_);
  for (const auto& [x, c] : terms_) r.terms_.emplace(add(x, e), c);
  return r;
}

LaurentPolynomial LaurentPolynomial::inverted() const {
  LaurentPolynomial r(vars_);
  for (const auto& [x, c] : terms_) {
    Exponent n = x;
    for (auto& k : n) k = -k;
    r.terms_.emplace(std::move(n), c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::divided_by_binomial(const Exponent& v) const {
  check_vars(vars_, v.size());
  if (std::all_of(v.begin(), v.end(), [](long k) { return k == 0; }))
    throw DomainError("division by t^0 - 1 = 0");
  // Lead term of t^v - 1 in lex order is t^v when v > 0 lexicographically;
  // otherwise use t^v - 1 = -t^v (t^{-v} - 1).
  const Exponent zero(vars_, 0);
  if (v < zero) {
    Exponent w = v;
    for (auto& k : w) k = -k;
    return -divided_by_binomial(w).shifted(w);
  }
  if (is_zero()) return *this;
  // Quotient terms have <e, v> within [min, max - |v|^2] of the dividend's support.
  long lo = std::numeric_limits<long>::max();
  for (const auto& [e, _] : terms_) lo = std::min(lo, dot(e, v));
  LaurentPolynomial rest = *this;
  LaurentPolynomial quotient(vars_);
  while (!rest.is_zero()) {
    const auto lead = std::prev(rest.terms_.end());
    Exponent e = lead->first;
    const BigInt c = lead->second;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= v[i];
    if (dot(e, v) < lo) throw DomainError("polynomial is not divisible by t^v - 1");
    quotient.add_term(e, c);
    rest.terms_.erase(lead);
    rest.add_term(e, c);
  }
  return quotient;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (is_zero()) return *this;
  Exponent mins(vars_, std::numeric_limits<long>::max());
  for (const auto& [e, _] : terms_)
    for (std::size_t i = 0; i < vars_; ++i) mins[i] = std::min(mins[i], e[i]);
  for (auto& m : mins) m = -m;
  LaurentPolynomial r = shifted(mins);
  if (r.terms_.begin()->second < 0) r = -r;
  return r;
}

Rational LaurentPolynomial::evaluate(const std::vector<Rational>& at) const {
  check_vars(vars_, at.size());
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term{c};
    for (std::size_t i = 0; i < vars_; ++i) {
      if (at[i].is_zero()) throw DomainError("Laurent polynomial evaluated at 0");
      const Rational base = e[i] >= 0 ? at[i] : Rational(1) / at[i];
      for (long k = 0; k < std::abs(e[i]); ++k) term *= base;
    }
    total += term;
  }
  return total;
}

std::string LaurentPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  // Highest exponent first reads naturally for one variable.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_ == 1 ? "t" : "t" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    const BigInt mag = abs(c);
    std::string term;
    if (mono.empty()) {
      term = mag.get_str();
    } else {
      term = (mag == 1 ? std::string() : mag.get_str() + "*") + mono;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

LaurentPolynomial determinant(const std::vector<std::vector<LaurentPolynomial>>& m,
                              std::size_t variables) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  if (n > 20) throw DomainError("determinant: matrix too large for cofactor expansion");
  // minors[mask] = det of rows [n - popcount(mask), n) restricted to the columns in mask.
  std::unordered_map<unsigned long, LaurentPolynomial> minors;
  minors.emplace(0UL, LaurentPolynomial::constant(variables, 1));
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    std::unordered_map<unsigned long, LaurentPolynomial> next;
    for (const auto& [mask, _] : minors) {
      for (std::size_t col = 0; col < n; ++col) {
        if (mask & (1UL << col)) continue;
        const unsigned long full = mask | (1UL << col);
        if (next.count(full)) continue;
        LaurentPolynomial det(variables);
        std::size_t position = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (!(full & (1UL << c))) continue;
          const auto& entry = m[row][c];
          if (!entry.is_zero()) {
            const LaurentPolynomial term = entry * minors.at(full & ~(1UL << c));
            if (position % 2 == 0) det += term;
            else det -= term;
          }
          ++position;
        }
        next.emplace(full, std::move(det));
      }
    }
    minors = std::move(next);
  }
  return minors.at(n == 0 ? 0UL : (n == 64 ? ~0UL : (1UL << n) - 1));
}

}  // namespace sfpoly
