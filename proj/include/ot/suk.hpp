#pragma once

#include <cstddef>
#include <vector>

#include "ot/arrangement.hpp"
#include "ot/bound.hpp"
#include "ot/order_type.hpp"
#include "ot/point.hpp"

namespace ot {

// State of the iterative cell refinement: chosen pivots and the surviving
// candidate pool, both as original indices in increasing order. Every
// survivor's index exceeds the last pivot's.
struct RefinementState {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> survivors;

  std::size_t step() const { return pivots.size(); }
};

struct RefineStepStats {
  std::size_t survivors_before = 0;
  std::size_t realized_classes = 0;
  std::size_t largest_class = 0;
};

// One refinement step: promotes the first survivor to a pivot, classifies
// the remaining survivors by their sign vector over the C(r, d-1)
// hyperplanes spanned by (d-1)-subsets of the old pivots plus the new one,
// and keeps the most populous class (ties to the lexicographically
// smallest sign vector, +1 before -1).
RefinementState refine_step(const PointSequence& seq,
                            const RefinementState& state,
                            RefineStepStats* stats = nullptr);

// Seeds the pivots with the first d-1 points and refines until the
// survivor pool is exhausted. Pivot lists of at most `verify_cap` points
// are post-checked for the common-sign pivot property.
std::vector<std::size_t> refine_all(const PointSequence& seq,
                                    std::size_t verify_cap = 30);

// Common-sign pivot property: every d-tuple of pivots orients all later
// pivots and all survivors with one constant sign.
bool verify_pivot_property(const PointSequence& seq,
                           const std::vector<std::size_t>& pivots,
                           const std::vector<std::size_t>& survivors);

struct ProjectionResult {
  PointSequence projected;              // dimension d-1, index order kept
  std::vector<std::size_t> source;      // projected i -> original index
  std::size_t apex = 0;                 // original index of the last pivot
  bool below = true;                    // side the kept pivots lie on
  std::size_t repairs = 0;              // shear repairs applied
};

// Central projection through the last pivot onto a horizontal hyperplane
// that separates it from the larger above/below side of the remaining
// pivots (ties to below). Coordinate collisions in the projected space are
// repaired with deterministic positive-determinant shears.
ProjectionResult project_through_last(const PointSequence& seq,
                                      const std::vector<std::size_t>& pivots);

// Dimension-recursive order-type homogeneous extraction: monotone
// subsequences for d=1, the monotone-x + cup/cap pipeline for d=2, and
// refine / project / recurse for d>=3. The result is always verified
// before it is returned; size is best effort below the guarantee
// threshold.
ExtractionResult suk_extract(const PointSequence& seq, std::size_t target);

}  // namespace ot
