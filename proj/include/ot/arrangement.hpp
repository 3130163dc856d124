#pragma once

#include <vector>

#include "ot/point.hpp"

namespace ot {

// Affine functional a.x + b, stored as d+1 coefficients (a_1..a_d, b),
// canonically scaled so the first nonzero coefficient is 1.
struct Hyperplane {
  std::vector<Rational> coeffs;

  // coeffs = (a_1..a_d, b); throws InvalidInput if a is all zero.
  static Hyperplane make(std::vector<Rational> coeffs);
  std::size_t dim() const { return coeffs.size() - 1; }
  Rational evaluate(const Point& p) const;
};

using SignVector = std::vector<Sign>;

// Per-point vector of functional signs, in input order. A point on any
// plane is a degeneracy, reported with a witness.
std::vector<SignVector> classify(const std::vector<Point>& points,
                                 const std::vector<Hyperplane>& planes);

// Number of cells of a simple arrangement of m hyperplanes in R^d:
// sum_{i=0}^{d} C(m, i).
Integer simple_cell_count(unsigned long m, unsigned long d);

}  // namespace ot
