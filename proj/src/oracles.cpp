#include "sfpoly/oracles.hpp"

#include <algorithm>
#include <functional>

namespace sfpoly::oracle {

namespace {

void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                  const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (cur.size() == k) {
    f(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, i + 1, f);
    cur.pop_back();
  }
}

Rational power(const Rational& x, long k) {
  Rational r(1);
  const Rational base = k >= 0 ? x : Rational(1) / x;
  for (long i = 0; i < std::abs(k); ++i) r *= base;
  return r;
}

}  // namespace

std::vector<ExactCovector> extreme_points(const std::vector<ExactCovector>& points) {
  std::vector<ExactCovector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return pts;
  const std::size_t d = pts.front().dim();
  std::vector<ExactCovector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<ExactCovector> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    bool inside = false;
    for (std::size_t k = 1; k <= std::min(d + 1, others.size()) && !inside; ++k) {
      std::vector<std::size_t> cur;
      combinations(others.size(), k, cur, 0, [&](const std::vector<std::size_t>& s) {
        if (inside) return;
        // Columns are the subset points lifted by a trailing 1.
        ExactMatrix m(d + 1, k);
        for (std::size_t c = 0; c < k; ++c) {
          for (std::size_t r = 0; r < d; ++r) m(r, c) = others[s[c]][r];
          m(d, c) = 1;
        }
        if (rank(m) != k) return;
        std::vector<Rational> rhs = pts[i].coords();
        rhs.emplace_back(1);
        const auto lambda = solve(m, rhs);
        if (lambda && std::all_of(lambda->begin(), lambda->end(),
                                  [](const Rational& x) { return x.sign() >= 0; }))
          inside = true;
      });
    }
    if (!inside) out.push_back(pts[i]);
  }
  return out;
}

std::set<ExactVector> facet_normals(const std::vector<ExactCovector>& points) {
  std::set<ExactVector> out;
  if (points.empty()) return out;
  const std::size_t d = points.front().dim();
  std::vector<std::size_t> cur;
  combinations(points.size(), d, cur, 0, [&](const std::vector<std::size_t>& s) {
    // Hyperplane <n, x> = c through the subset: solve [x | -1] (n, c) = 0.
    ExactMatrix m(d, d + 1);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) m(r, c) = points[s[r]][c];
      m(r, d) = -1;
    }
    const auto kernel = nullspace(m);
    if (kernel.size() != 1) return;
    std::vector<Rational> n(kernel[0].begin(), kernel[0].begin() + d);
    const Rational c = kernel[0][d];
    if (std::all_of(n.begin(), n.end(), [](const Rational& x) { return x.is_zero(); })) return;
    int side = 0;
    for (const auto& p : points) {
      Rational v = -c;
      for (std::size_t k = 0; k < d; ++k) v += n[k] * p[k];
      const int sgn = v.sign();
      if (sgn == 0) continue;
      if (side == 0) side = sgn;
      else if (side != sgn) return;
    }
    if (side == 0) return;
    if (side > 0)
      for (auto& x : n) x = -x;
    out.insert(ExactVector(primitive(std::span<const Rational>(n))));
  });
  return out;
}

Rational fox_at(const FreeWord& w, std::size_t g, const AbelianizationMap& ab,
                const std::vector<Rational>& t) {
  const auto value = [&](std::size_t gen) {
    Rational v(1);
    const auto& e = ab.image(gen);
    for (std::size_t i = 0; i < e.size(); ++i) v *= power(t[i], e[i]);
    return v;
  };
  Rational prefix(1);
  Rational total;
  for (const auto& l : w.letters()) {
    const Rational x = value(l.generator);
    if (l.sign > 0) {
      if (l.generator == g) total += prefix;
      prefix *= x;
    } else {
      prefix /= x;
      if (l.generator == g) total -= prefix;
    }
  }
  return total;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Rational fox_minor_at(const GroupPresentation& pr, const AbelianizationMap& ab,
                      std::size_t column, const std::vector<Rational>& t) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : pr.relators()) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < pr.generator_count(); ++j)
      if (j != column) row.push_back(fox_at(r, j, ab, t));
    m.push_back(std::move(row));
  }
  return determinant(std::move(m));
}

}  // namespace sfpoly::oracle
