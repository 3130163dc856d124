#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ot/rational.hpp"

namespace ot {

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_from_int(int s) {
  return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero);
}
inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return sign_from_int(-to_int(s)); }

struct Point {
  std::vector<Rational> coords;

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }
  bool operator==(const Point&) const = default;
};

enum class GpState { Verified, Unverified, Degenerate };

// Witness of a general-position violation: either d+1 indices on a common
// hyperplane, or two indices sharing coordinate axis `axis`.
struct DegeneracyWitness {
  enum class Kind { None, Hyperplane, SharedCoordinate };
  Kind kind = Kind::None;
  std::vector<std::size_t> indices;
  std::size_t axis = 0;

  std::string describe() const;
};

struct GpStatus {
  GpState state = GpState::Unverified;
  DegeneracyWitness witness;
};

struct PointSequence {
  std::size_t dim = 0;
  std::vector<Point> points;
  GpStatus status;

  std::size_t size() const { return points.size(); }
  const Point& operator[](std::size_t i) const { return points[i]; }
};

}  // namespace ot
