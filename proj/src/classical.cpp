#include "ot/classical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "ot/tuples.hpp"

namespace ot {

namespace {

// Longest strictly monotone subsequence via patience sorting; cmp decides
// the direction. Returns indices into values.
std::vector<std::size_t> patience_lms(
    const std::vector<Rational>& values,
    bool (*cmp)(const Rational&, const Rational&)) {
  const std::size_t n = values.size();
  std::vector<std::size_t> tails;  // tails[l] = index of best tail, length l+1
  std::vector<std::size_t> prev(n, CupCapTable::npos);
  for (std::size_t i = 0; i < n; ++i) {
    // first pile whose tail does not precede values[i]
    std::size_t lo = 0, hi = tails.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (cmp(values[tails[mid]], values[i]))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo > 0) prev[i] = tails[lo - 1];
    if (lo == tails.size())
      tails.push_back(i);
    else
      tails[lo] = i;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = tails.empty() ? CupCapTable::npos : tails.back();
       i != CupCapTable::npos; i = prev[i])
    out.push_back(i);
  std::reverse(out.begin(), out.end());
  return out;
}

bool lt(const Rational& a, const Rational& b) { return a < b; }
bool gt(const Rational& a, const Rational& b) { return a > b; }

}  // namespace

ExtractionResult monotone_extract(const std::vector<Rational>& values,
                                  std::size_t target) {
  require(!values.empty(), ErrorCode::InvalidInput, "empty value list");
  {
    std::vector<Rational> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            ErrorCode::InvalidInput, "values must be pairwise distinct");
  }

  std::vector<std::size_t> inc = patience_lms(values, lt);
  std::vector<std::size_t> dec = patience_lms(values, gt);

  ExtractionResult res;
  res.algorithm = "monotone";
  if (inc.size() >= dec.size()) {
    res.indices = std::move(inc);
    res.sign = Sign::Positive;
  } else {
    res.indices = std::move(dec);
    res.sign = Sign::Negative;
  }
  if (res.indices.size() >= 2) {
    PointSequence line;
    line.dim = 1;
    for (const Rational& v : values) line.points.push_back(Point{{v}});
    auto rep = is_homogeneous(line, res.indices);
    require(rep.homogeneous && rep.sign == res.sign,
            ErrorCode::InternalInvariantViolation,
            "monotone result failed verification");
    res.verified = true;
  }
  if (target >= 2 &&
      Integer(static_cast<unsigned long>(values.size())) >=
          Integer(static_cast<unsigned long>(target - 1)) * (target - 1) + 1)
    require(res.size() >= target, ErrorCode::InternalInvariantViolation,
            "monotone guarantee violated");
  return res;
}

namespace {

struct PairDp {
  // f[i*n+j], prev[i*n+j] for pairs i<j of x-sorted points.
  std::size_t n = 0;
  std::vector<std::uint32_t> f, prev;
  static constexpr std::uint32_t kNone = UINT32_MAX;

  explicit PairDp(std::size_t n_)
      : n(n_), f(n_ * n_, 2), prev(n_ * n_, kNone) {}
  std::uint32_t& val(std::size_t i, std::size_t j) { return f[i * n + j]; }
  std::uint32_t& back(std::size_t i, std::size_t j) { return prev[i * n + j]; }
};

Rational slope(const PointSequence& seq, std::size_t a, std::size_t b) {
  return (seq[b].coords[1] - seq[a].coords[1]) /
         (seq[b].coords[0] - seq[a].coords[0]);
}

void check_x_increasing(const PointSequence& seq) {
  require(seq.dim == 2, ErrorCode::InvalidInput, "cup/cap needs dimension 2");
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    require(seq[i].coords[0] < seq[i + 1].coords[0], ErrorCode::InvalidInput,
            "first coordinates must be strictly increasing");
}

void collinear_error(std::size_t a, std::size_t b, std::size_t c) {
  DegeneracyWitness w;
  w.kind = DegeneracyWitness::Kind::Hyperplane;
  w.indices = {a, b, c};
  throw Error(ErrorCode::InvalidInput, "collinear input: " + w.describe());
}

// Runs the cup (ascending slopes) or cap (descending) pair DP. For each
// middle point the incoming and outgoing segments are sorted by slope and
// merged with a running prefix maximum, so the whole pass is O(N^2 log N)
// exact-slope comparisons.
void run_pair_dp(const PointSequence& seq, bool cup, PairDp& dp) {
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> in(i), out(n - i - 1);
    std::iota(in.begin(), in.end(), 0);
    std::iota(out.begin(), out.end(), i + 1);
    std::vector<Rational> in_slope(i), out_slope(n - i - 1);
    for (std::size_t h = 0; h < i; ++h) in_slope[h] = slope(seq, h, i);
    for (std::size_t j = 0; j < out.size(); ++j)
      out_slope[j] = slope(seq, i, out[j]);

    auto order = [&](const std::vector<Rational>& sl, bool asc) {
      return [&sl, asc](std::size_t a, std::size_t b) {
        return asc ? sl[a] < sl[b] : sl[a] > sl[b];
      };
    };
    std::vector<std::size_t> in_pos(i), out_pos(out.size());
    std::iota(in_pos.begin(), in_pos.end(), 0);
    std::iota(out_pos.begin(), out_pos.end(), 0);
    std::sort(in_pos.begin(), in_pos.end(), order(in_slope, cup));
    std::sort(out_pos.begin(), out_pos.end(), order(out_slope, cup));
    for (std::size_t a = 0; a + 1 < in_pos.size(); ++a)
      if (in_slope[in_pos[a]] == in_slope[in_pos[a + 1]])
        collinear_error(std::min(in_pos[a], in_pos[a + 1]),
                        std::max(in_pos[a], in_pos[a + 1]), i);
    for (std::size_t a = 0; a + 1 < out_pos.size(); ++a)
      if (out_slope[out_pos[a]] == out_slope[out_pos[a + 1]])
        collinear_error(i, out[std::min(out_pos[a], out_pos[a + 1])],
                        out[std::max(out_pos[a], out_pos[a + 1])]);

    std::uint32_t best = 0, best_h = PairDp::kNone;
    std::size_t a = 0;
    for (std::size_t b = 0; b < out_pos.size(); ++b) {
      std::size_t j = out[out_pos[b]];
      const Rational& sj = out_slope[out_pos[b]];
      auto strictly_before = [&](const Rational& s) {
        return cup ? s < sj : s > sj;
      };
      while (a < in_pos.size() && strictly_before(in_slope[in_pos[a]])) {
        std::size_t h = in_pos[a];
        if (dp.val(h, i) > best) {
          best = dp.val(h, i);
          best_h = static_cast<std::uint32_t>(h);
        }
        ++a;
      }
      if (a < in_pos.size() && in_slope[in_pos[a]] == sj)
        collinear_error(in_pos[a], i, j);
      if (best > 0) {
        dp.val(i, j) = best + 1;
        dp.back(i, j) = best_h;
      }
    }
  }
}

std::vector<std::size_t> reconstruct(PairDp& dp, std::size_t i,
                                     std::size_t j) {
  std::vector<std::size_t> chain = {j, i};
  while (dp.back(i, j) != PairDp::kNone) {
    std::size_t h = dp.back(i, j);
    chain.push_back(h);
    j = i;
    i = h;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

CupCapTable cupcap_table(const PointSequence& seq) {
  check_x_increasing(seq);
  const std::size_t n = seq.size();
  CupCapTable t;
  t.cup_len.assign(n, 1);
  t.cap_len.assign(n, 1);
  t.cup_prev.assign(n, CupCapTable::npos);
  t.cap_prev.assign(n, CupCapTable::npos);
  if (n < 2) return t;
  PairDp cupdp(n), capdp(n);
  run_pair_dp(seq, true, cupdp);
  run_pair_dp(seq, false, capdp);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cupdp.val(i, j) > t.cup_len[j]) {
        t.cup_len[j] = cupdp.val(i, j);
        t.cup_prev[j] = i;
      }
      if (capdp.val(i, j) > t.cap_len[j]) {
        t.cap_len[j] = capdp.val(i, j);
        t.cap_prev[j] = i;
      }
    }
  return t;
}

ExtractionResult cupcap_extract(const PointSequence& seq,
                                std::size_t target) {
  check_x_increasing(seq);
  const std::size_t n = seq.size();
  require(n >= 1, ErrorCode::InvalidInput, "empty sequence");

  ExtractionResult res;
  res.algorithm = "cupcap";
  if (n == 1) {
    res.indices = {0};
    res.sign = Sign::Positive;
    return res;
  }

  PairDp cupdp(n), capdp(n);
  run_pair_dp(seq, true, cupdp);
  run_pair_dp(seq, false, capdp);

  std::uint32_t best = 0;
  bool best_is_cup = true;
  std::size_t bi = 0, bj = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cupdp.val(i, j) > best) {
        best = cupdp.val(i, j);
        best_is_cup = true;
        bi = i;
        bj = j;
      }
      if (capdp.val(i, j) > best) {
        best = capdp.val(i, j);
        best_is_cup = false;
        bi = i;
        bj = j;
      }
    }

  res.indices = reconstruct(best_is_cup ? cupdp : capdp, bi, bj);
  res.sign = best_is_cup ? Sign::Positive : Sign::Negative;
  if (res.size() >= 3) {
    auto rep = is_homogeneous(seq, res.indices);
    require(rep.homogeneous && rep.sign == res.sign,
            ErrorCode::InternalInvariantViolation,
            "cup/cap result failed verification");
    res.verified = true;
  }
  if (target >= 3) {
    Integer threshold = binomial(2 * target - 4, target - 2) + 1;
    if (Integer(static_cast<unsigned long>(n)) >= threshold)
      require(res.size() >= target, ErrorCode::InternalInvariantViolation,
              "cups-caps guarantee violated");
  }
  return res;
}

ExtractionResult planar_homogeneous_extract(const PointSequence& seq,
                                            std::size_t target) {
  require(seq.dim == 2, ErrorCode::InvalidInput, "planar extractor needs d=2");
  require(seq.status.state != GpState::Degenerate, ErrorCode::DegenerateInput,
          "sequence is degenerate: " + seq.status.witness.describe());

  std::vector<Rational> xs;
  xs.reserve(seq.size());
  for (const Point& p : seq.points) xs.push_back(p.coords[0]);
  ExtractionResult stage1 = monotone_extract(xs, 0);

  const bool reflected = stage1.sign == Sign::Negative;
  PointSequence sub;
  sub.dim = 2;
  for (std::size_t i : stage1.indices) {
    Point p = seq[i];
    if (reflected) p.coords[0] = -p.coords[0];
    sub.points.push_back(std::move(p));
  }

  ExtractionResult chain = cupcap_extract(sub, target);

  ExtractionResult res;
  res.algorithm = "planar";
  for (std::size_t pos : chain.indices)
    res.indices.push_back(stage1.indices[pos]);
  res.sign = reflected ? flip(chain.sign) : chain.sign;
  if (res.size() >= 3) {
    auto rep = is_homogeneous(seq, res.indices);
    require(rep.homogeneous && rep.sign == res.sign,
            ErrorCode::InternalInvariantViolation,
            "planar result failed verification");
    res.verified = true;
  }
  if (target >= 3) {
    Integer c = binomial(2 * target - 4, target - 2);
    if (Integer(static_cast<unsigned long>(seq.size())) >= c * c + 1)
      require(res.size() >= target, ErrorCode::InternalInvariantViolation,
              "planar guarantee violated");
  }
  return res;
}

}  // namespace ot
