#pragma once

#include <cstdint>
#include <vector>

#include "ot/point.hpp"

namespace ot {

// Points (t, t^2, ..., t^d) at t = t_start + i*t_step; verified general
// position and fully homogeneous with sign +1.
PointSequence gen_moment(std::size_t dim, std::size_t count,
                         const Rational& t_start = Rational(1),
                         const Rational& t_step = Rational(1));

// The (n-1)^2-element block sequence with no monotone n-subsequence,
// DP-certified to have maximum monotone length exactly n-1.
std::vector<Rational> gen_es_monotone(std::size_t n);

// A C(2n-4, n-2)-point planar sequence with no n-cup and no n-cap,
// x-increasing, general position, DP-certified.
PointSequence gen_es_capcup(std::size_t n);

// Deterministic random integer coordinates in [-bound, bound]; per-axis
// collisions are resampled and small instances get the exhaustive
// general-position check. Throws RetriesExhausted when the box is too
// tight for the requested count.
PointSequence gen_random(std::size_t dim, std::size_t count,
                         std::uint64_t seed, const Integer& bound);

}  // namespace ot
