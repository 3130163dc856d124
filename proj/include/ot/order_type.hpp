#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ot/orientation.hpp"
#include "ot/point.hpp"

namespace ot {

// The complete map chi: increasing (d+1)-tuples -> {+1,-1}. Entry i holds
// the orientation of the i-th tuple in lexicographic order; the tuples
// themselves stay implicit (combinatorial rank).
struct OrderTypeSignature {
  std::size_t dim = 0;
  std::size_t n_points = 0;
  std::vector<Sign> signs;

  std::size_t plus_count() const;
  std::size_t minus_count() const;
  bool operator==(const OrderTypeSignature&) const = default;
};

struct ExtractionResult {
  std::vector<std::size_t> indices;  // strictly increasing original indices
  Sign sign = Sign::Positive;
  bool verified = false;
  std::string algorithm;

  std::size_t size() const { return indices.size(); }
};

inline constexpr std::uint64_t kDefaultTupleBudget = 10'000'000;

// Full chi map of a sequence. Throws BudgetExceeded if C(N, d+1) exceeds
// the tuple budget and DegenerateInput on a zero orientation. threads > 1
// splits the tuple range; the merged result is identical for any count.
OrderTypeSignature signature(const PointSequence& seq,
                             std::uint64_t budget = kDefaultTupleBudget,
                             unsigned threads = 1);

struct HomogeneityReport {
  bool homogeneous = false;
  Sign sign = Sign::Positive;
  // First lexicographic pair of tuples with conflicting orientations.
  std::vector<std::size_t> tuple_a, tuple_b;
};

// Checks that all (d+1)-tuples of the selected subsequence share one
// orientation. Rejects |indices| <= d as InvalidInput rather than calling
// the claim vacuously true.
HomogeneityReport is_homogeneous(const PointSequence& seq,
                                 const std::vector<std::size_t>& indices);

// Exact maximum-cardinality homogeneous subsequence by branch-and-bound
// over index subsets; ties go to the lexicographically smallest index
// list. Cap on N keeps the enumeration honest.
ExtractionResult brute_force_max_homogeneous(const PointSequence& seq,
                                             std::size_t cap = 25);

// True iff every selected point lies on a facet of the selected set's
// convex hull; facets are d-subsets with all remaining selected points
// strictly on one side (simplicial under general position).
bool convex_position_check(const PointSequence& seq,
                           const std::vector<std::size_t>& indices);

// True iff the enumerated facet family, read in index order, satisfies
// Gale's evenness condition.
bool cyclic_polytope_check(const PointSequence& seq,
                           const std::vector<std::size_t>& indices);

}  // namespace ot
