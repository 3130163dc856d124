#pragma once

#include <optional>
#include <string>

#include "ot/rational.hpp"

namespace ot {

// Guarantee threshold, exact where feasible: a plain integer, a power of
// two with exact exponent, or a symbolic exponential tower once the
// exponent itself blows past the bit cap.
struct BoundValue {
  enum class Kind { Exact, PowerOfTwo, Tower };
  Kind kind = Kind::Exact;
  Integer value;          // Kind::Exact
  Integer exponent;       // Kind::PowerOfTwo, the E of 2^E
  unsigned height = 0;    // Kind::Tower
  unsigned long target = 0;  // Kind::Tower, the n inside the top exponent

  std::string render() const;
};

inline constexpr unsigned long kDefaultBitCap = 1'000'000;

// Input-size threshold above which extraction of an order-type homogeneous
// n-subsequence is guaranteed: (n-1)^2 + 1 in dimension 1 and
// 2^ceil(4 d^2 M log2 M) with M = threshold(d-1, n-1) above. Requires
// n >= d+1.
BoundValue guarantee_threshold(unsigned long d, unsigned long n,
                               unsigned long bit_cap = kDefaultBitCap);

// Three-way comparison where the representations allow it; towers compare
// by (height, n), which follows the formula's monotonicity.
std::optional<int> compare(const BoundValue& a, const BoundValue& b);

}  // namespace ot
