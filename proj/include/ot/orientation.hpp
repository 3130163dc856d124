#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ot/point.hpp"

namespace ot {

// Sign of the (d+1)x(d+1) determinant whose column j is
// (1, a_{j,1}, ..., a_{j,d}) for the j-th supplied point, points taken in
// tuple order. Positive for (0,0),(1,0),(0,1) in the plane.
Sign orientation(std::span<const Point> points, std::size_t dim);

// Convenience: orientation of the tuple seq[idx[0]], ..., seq[idx[d]].
Sign orientation_of(const PointSequence& seq, std::span<const std::size_t> idx);

// Exact sign of the determinant of a square integer matrix
// (fraction-free Bareiss elimination).
Sign bareiss_det_sign(std::vector<std::vector<Integer>> m);

// Exact determinant of a square rational matrix.
Rational rational_det(std::vector<std::vector<Rational>> m);

// Checks both general-position conditions: every (d+1)-subset has nonzero
// orientation and every coordinate projection is injective. The exhaustive
// subset sweep only runs for seq.size() <= exhaustive_cap; larger inputs
// come back Unverified (degeneracies then surface lazily, as orientation
// zeros, in whichever operation hits them).
GpStatus validate_general_position(const PointSequence& seq,
                                   std::size_t exhaustive_cap = 30);

// Applies x -> M x + shift to every point. M must have positive
// determinant (checked exactly), so every orientation is preserved.
PointSequence positive_linear_transform(
    const PointSequence& seq,
    const std::vector<std::vector<Rational>>& matrix, const Point& shift);

}  // namespace ot
