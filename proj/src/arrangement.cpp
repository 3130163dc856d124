#include "ot/arrangement.hpp"

#include "ot/tuples.hpp"

namespace ot {

Hyperplane Hyperplane::make(std::vector<Rational> coeffs) {
  require(coeffs.size() >= 2, ErrorCode::InvalidInput,
          "hyperplane needs at least one linear coefficient");
  bool nonzero = false;
  Rational lead;
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) {
      nonzero = true;
      lead = coeffs[i];
      break;
    }
  require(nonzero, ErrorCode::InvalidInput,
          "hyperplane linear part is zero");
  for (Rational& c : coeffs) c /= lead;
  return Hyperplane{std::move(coeffs)};
}

Rational Hyperplane::evaluate(const Point& p) const {
  require(p.dim() == dim(), ErrorCode::InvalidInput,
          "point/hyperplane dimension mismatch");
  Rational acc = coeffs.back();
  for (std::size_t i = 0; i < dim(); ++i) acc += coeffs[i] * p.coords[i];
  return acc;
}

std::vector<SignVector> classify(const std::vector<Point>& points,
                                 const std::vector<Hyperplane>& planes) {
  std::vector<SignVector> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    SignVector v;
    v.reserve(planes.size());
    for (std::size_t h = 0; h < planes.size(); ++h) {
      int s = sgn(planes[h].evaluate(points[i]));
      require(s != 0, ErrorCode::DegenerateInput,
              "point " + std::to_string(i) + " lies on hyperplane " +
                  std::to_string(h));
      v.push_back(sign_from_int(s));
    }
    out.push_back(std::move(v));
  }
  return out;
}

Integer simple_cell_count(unsigned long m, unsigned long d) {
  require(d >= 1, ErrorCode::InvalidInput, "dimension must be positive");
  Integer total(0);
  for (unsigned long i = 0; i <= d && i <= m; ++i) total += binomial(m, i);
  return total;
}

}  // namespace ot
