#include "ot/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "ot/classical.hpp"
#include "ot/orientation.hpp"

namespace ot {

PointSequence gen_moment(std::size_t dim, std::size_t count,
                         const Rational& t_start, const Rational& t_step) {
  require(dim >= 1 && count >= 1, ErrorCode::InvalidInput,
          "need dim >= 1 and count >= 1");
  require(sgn(t_step) > 0, ErrorCode::InvalidInput, "t_step must be positive");

  PointSequence seq;
  seq.dim = dim;
  Rational t = t_start;
  for (std::size_t i = 0; i < count; ++i, t += t_step) {
    Point p;
    p.coords.reserve(dim);
    Rational pw(1);
    for (std::size_t j = 0; j < dim; ++j) {
      pw *= t;
      p.coords.push_back(pw);
    }
    seq.points.push_back(std::move(p));
  }
  // Distinct parameters make every orientation a nonzero Vandermonde
  // determinant; only the per-axis injectivity can fail (a parameter range
  // straddling zero collides even powers), and that we reject.
  GpStatus st = validate_general_position(seq, 0);
  require(st.state != GpState::Degenerate, ErrorCode::InvalidInput,
          "parameter range breaks coordinate distinctness: " +
              st.witness.describe());
  seq.status.state = GpState::Verified;
  return seq;
}

std::vector<Rational> gen_es_monotone(std::size_t n) {
  require(n >= 2, ErrorCode::InvalidInput, "need n >= 2");
  std::vector<Rational> values;
  values.reserve((n - 1) * (n - 1));
  for (std::size_t block = n - 1; block-- > 0;)
    for (std::size_t j = 1; j <= n - 1; ++j)
      values.emplace_back(static_cast<long>(block * (n - 1) + j));

  ExtractionResult cert = monotone_extract(values, 0);
  require(cert.size() == n - 1, ErrorCode::InternalInvariantViolation,
          "monotone-free construction failed its certificate");
  return values;
}

namespace {

// Recursive extremal set with no a-cup and no b-cap, |S| = C(a+b-4, a-2):
// the right part sits above and to the right of the left part, with every
// cross slope exceeding every slope inside either part.
std::vector<Point> cupcap_free(std::size_t a, std::size_t b) {
  if (a <= 2 || b <= 2) return {Point{{Rational(0), Rational(0)}}};
  std::vector<Point> left = cupcap_free(a - 1, b);
  std::vector<Point> right = cupcap_free(a, b - 1);

  auto extremes = [](const std::vector<Point>& pts) {
    Rational minx = pts[0].coords[0], maxx = pts[0].coords[0];
    Rational miny = pts[0].coords[1], maxy = pts[0].coords[1];
    for (const Point& p : pts) {
      minx = std::min(minx, p.coords[0]);
      maxx = std::max(maxx, p.coords[0]);
      miny = std::min(miny, p.coords[1]);
      maxy = std::max(maxy, p.coords[1]);
    }
    return std::array<Rational, 4>{minx, maxx, miny, maxy};
  };
  auto max_abs_slope = [](const std::vector<Point>& pts) {
    Rational best(0);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        Rational s = abs((pts[j].coords[1] - pts[i].coords[1]) /
                         (pts[j].coords[0] - pts[i].coords[0]));
        best = std::max(best, s);
      }
    return best;
  };

  auto [lminx, lmaxx, lminy, lmaxy] = extremes(left);
  auto [rminx, rmaxx, rminy, rmaxy] = extremes(right);
  Rational s = std::max(max_abs_slope(left), max_abs_slope(right));
  Rational dx = lmaxx - rminx + 1;
  Rational width = rmaxx + dx - lminx;
  Rational dy = (s + 1) * width + (lmaxy - rminy) + 1;

  for (Point& p : right) {
    p.coords[0] += dx;
    p.coords[1] += dy;
  }
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace

PointSequence gen_es_capcup(std::size_t n) {
  require(n >= 3, ErrorCode::InvalidInput, "need n >= 3");
  std::vector<Point> base = cupcap_free(n, n);

  // The recursive placement controls slopes but not collinearity; a
  // curved perturbation small enough to keep all strict slope orderings
  // restores general position, and the DP certificate revalidates the
  // cup/cap-free claim either way.
  for (unsigned attempt = 0; attempt <= 40; ++attempt) {
    PointSequence seq;
    seq.dim = 2;
    seq.points = base;
    if (attempt > 0) {
      Rational delta(1);
      for (unsigned k = 0; k < 8 * attempt; ++k) delta /= 2;
      Rational scale(1);
      for (Point& p : seq.points) {
        p.coords[1] += delta * scale;
        scale *= 3;
      }
    }
    GpStatus st = validate_general_position(seq, 100);
    if (st.state != GpState::Verified) continue;
    seq.status = st;
    ExtractionResult cert = cupcap_extract(seq, 0);
    if (cert.size() == n - 1) return seq;
  }
  throw Error(ErrorCode::InternalInvariantViolation,
              "cup/cap-free construction failed its certificate");
}

PointSequence gen_random(std::size_t dim, std::size_t count,
                         std::uint64_t seed, const Integer& bound) {
  require(dim >= 1 && count >= 1, ErrorCode::InvalidInput,
          "need dim >= 1 and count >= 1");
  require(bound >= 1, ErrorCode::InvalidInput, "bound must be >= 1");
  Integer range = 2 * bound + 1;
  require(range.fits_ulong_p(), ErrorCode::InvalidInput,
          "bound too large for the integer sampler");
  const unsigned long range_u = range.get_ui();

  std::mt19937_64 rng(seed);
  const std::size_t max_retries = 1000 + 100 * count;

  for (unsigned restart = 0; restart < 50; ++restart) {
    PointSequence seq;
    seq.dim = dim;
    std::vector<std::set<long>> used(dim);
    std::size_t retries = 0;
    bool full_ok = true;
    while (seq.points.size() < count) {
      Point p;
      p.coords.reserve(dim);
      std::vector<long> vals(dim);
      for (std::size_t j = 0; j < dim; ++j)
        vals[j] = static_cast<long>(rng() % range_u) -
                  static_cast<long>(bound.get_ui());
      bool clash = false;
      for (std::size_t j = 0; j < dim; ++j)
        if (used[j].count(vals[j])) clash = true;
      if (clash) {
        if (++retries > max_retries)
          throw Error(ErrorCode::RetriesExhausted,
                      "coordinate box too tight for the requested count");
        continue;
      }
      for (std::size_t j = 0; j < dim; ++j) {
        used[j].insert(vals[j]);
        p.coords.emplace_back(vals[j]);
      }
      seq.points.push_back(std::move(p));
    }
    seq.status = validate_general_position(seq);
    if (seq.status.state == GpState::Degenerate) {
      full_ok = false;  // small instance failed the exhaustive check
    }
    if (full_ok) return seq;
  }
  throw Error(ErrorCode::RetriesExhausted,
              "could not sample a general-position sequence");
}

}  // namespace ot
