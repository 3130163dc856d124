#pragma once

#include <vector>

#include "ot/order_type.hpp"
#include "ot/point.hpp"

namespace ot {

// Per-index summary of the cup/cap dynamic program: longest cup (cap)
// having point i as its last element, with predecessor links for
// reconstruction (prev[i] = previous point of one optimal chain, or npos).
struct CupCapTable {
  std::vector<std::size_t> cup_len, cap_len;
  std::vector<std::size_t> cup_prev, cap_prev;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Longest monotone subsequence of pairwise-distinct values, patience-style
// in O(N log N); increasing wins ties. Sign +1 for increasing, -1 for
// decreasing. If values.size() >= (target-1)^2 + 1 the result is checked
// to have size >= target.
ExtractionResult monotone_extract(const std::vector<Rational>& values,
                                  std::size_t target);

// Longest cup or cap of a planar sequence sorted by strictly increasing
// first coordinate; cup wins ties. Cups report +1, caps -1. If
// seq.size() >= C(2*target-4, target-2) + 1 the result is checked to have
// size >= target.
ExtractionResult cupcap_extract(const PointSequence& seq, std::size_t target);

// The cup/cap DP table itself, for callers that want per-index lengths.
CupCapTable cupcap_table(const PointSequence& seq);

// Monotone-x stage followed by the cup/cap stage (with reflection
// bookkeeping when the x-stage comes out decreasing). Output indices are
// in original order and the result is verified homogeneous. Guarantee:
// seq.size() >= C(2*target-4, target-2)^2 + 1 implies size >= target.
ExtractionResult planar_homogeneous_extract(const PointSequence& seq,
                                            std::size_t target);

}  // namespace ot
