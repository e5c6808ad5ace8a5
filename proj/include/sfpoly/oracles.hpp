#pragma once

// Slow reference implementations used to cross-check the main algorithms.

#include <cstddef>
#include <set>
#include <vector>

#include "sfpoly/foxcalc.hpp"
#include "sfpoly/linalg.hpp"

namespace sfpoly::oracle {

/// Distinct points that are not convex combinations of the others: each point
/// is tested against every affinely independent subset of the remaining
/// points by an exact barycentric solve.  Sorted lexicographically.
std::vector<ExactCovector> extreme_points(const std::vector<ExactCovector>& points);

/// Primitive outward facet normals of a full-dimensional point set, by fitting
/// a hyperplane through every d-subset.
std::set<ExactVector> facet_normals(const std::vector<ExactCovector>& points);

/// Fox derivative evaluated at t, walking the word with rational arithmetic.
Rational fox_at(const FreeWord& w, std::size_t g, const AbelianizationMap& ab,
                const std::vector<Rational>& t);

/// Determinant of a rational matrix by Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

/// det(A with column j deleted) at t, A the Fox matrix evaluated entrywise.
Rational fox_minor_at(const GroupPresentation& pr, const AbelianizationMap& ab,
                      std::size_t column, const std::vector<Rational>& t);

}  // namespace sfpoly::oracle
