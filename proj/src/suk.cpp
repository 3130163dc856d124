#include "ot/suk.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ot/classical.hpp"
#include "ot/orientation.hpp"
#include "ot/tuples.hpp"

namespace ot {

namespace {

bool sign_vector_less(const SignVector& a, const SignVector& b) {
  // +1 orders before -1
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] == Sign::Positive;
  return false;
}

void throw_zero(const std::vector<std::size_t>& tuple) {
  DegeneracyWitness w;
  w.kind = DegeneracyWitness::Kind::Hyperplane;
  w.indices = tuple;
  std::sort(w.indices.begin(), w.indices.end());
  throw Error(ErrorCode::DegenerateInput,
              "degenerate input: " + w.describe());
}

}  // namespace

RefinementState refine_step(const PointSequence& seq,
                            const RefinementState& state,
                            RefineStepStats* stats) {
  const std::size_t d = seq.dim;
  require(!state.survivors.empty(), ErrorCode::InvalidInput,
          "no survivors left to refine");
  require(state.pivots.size() >= d - 1, ErrorCode::InvalidInput,
          "refinement needs at least d-1 pivots");

  RefinementState next;
  next.pivots = state.pivots;
  const std::size_t new_pivot = state.survivors.front();
  next.pivots.push_back(new_pivot);

  // (d-1)-subsets of the old pivots, lex order; together with the new
  // pivot each spans one hyperplane of this step's arrangement.
  std::vector<std::vector<std::size_t>> planes;
  for_each_combination(state.pivots.size(), d - 1,
                       [&](const std::vector<std::size_t>& pos) {
                         std::vector<std::size_t> t(d - 1);
                         for (std::size_t j = 0; j + 1 < d; ++j)
                           t[j] = state.pivots[pos[j]];
                         planes.push_back(std::move(t));
                       });

  std::map<SignVector, std::vector<std::size_t>,
           bool (*)(const SignVector&, const SignVector&)>
      classes(sign_vector_less);
  std::vector<std::size_t> tuple(d + 1);
  for (std::size_t s = 1; s < state.survivors.size(); ++s) {
    const std::size_t p = state.survivors[s];
    SignVector v;
    v.reserve(planes.size());
    for (const auto& t : planes) {
      for (std::size_t j = 0; j + 1 < d; ++j) tuple[j] = t[j];
      tuple[d - 1] = new_pivot;
      tuple[d] = p;
      Sign sig = orientation_of(seq, tuple);
      if (sig == Sign::Zero) throw_zero(tuple);
      v.push_back(sig);
    }
    classes[std::move(v)].push_back(p);
  }

  std::size_t largest = 0;
  const std::vector<std::size_t>* keep = nullptr;
  for (const auto& [vec, members] : classes) {
    if (members.size() > largest) {  // first (lex-smallest) wins ties
      largest = members.size();
      keep = &members;
    }
  }
  if (keep) next.survivors = *keep;

  if (stats) {
    stats->survivors_before = state.survivors.size();
    stats->realized_classes = classes.size();
    stats->largest_class = largest;
  }
  return next;
}

std::vector<std::size_t> refine_all(const PointSequence& seq,
                                    std::size_t verify_cap) {
  const std::size_t d = seq.dim;
  require(d >= 2, ErrorCode::InvalidInput, "refinement needs d >= 2");
  require(seq.size() >= d, ErrorCode::InvalidInput,
          "refinement needs at least d points");

  RefinementState state;
  for (std::size_t i = 0; i + 1 < d; ++i) state.pivots.push_back(i);
  for (std::size_t i = d - 1; i < seq.size(); ++i)
    state.survivors.push_back(i);

  while (!state.survivors.empty()) state = refine_step(seq, state);

  if (state.pivots.size() <= verify_cap)
    require(verify_pivot_property(seq, state.pivots, {}),
            ErrorCode::InternalInvariantViolation,
            "pivot common-sign property failed");
  return state.pivots;
}

bool verify_pivot_property(const PointSequence& seq,
                           const std::vector<std::size_t>& pivots,
                           const std::vector<std::size_t>& survivors) {
  const std::size_t d = seq.dim;
  if (pivots.size() < d) return true;
  bool ok = true;
  std::vector<std::size_t> tuple(d + 1);
  for_each_combination(pivots.size(), d,
                       [&](const std::vector<std::size_t>& pos) {
                         Sign common = Sign::Zero;
                         auto check = [&](std::size_t q) {
                           for (std::size_t j = 0; j < d; ++j)
                             tuple[j] = pivots[pos[j]];
                           tuple[d] = q;
                           Sign s = orientation_of(seq, tuple);
                           if (s == Sign::Zero) return false;
                           if (common == Sign::Zero) common = s;
                           return s == common;
                         };
                         for (std::size_t j = pos[d - 1] + 1;
                              j < pivots.size(); ++j)
                           if (!check(pivots[j])) {
                             ok = false;
                             return false;
                           }
                         for (std::size_t q : survivors)
                           if (!check(q)) {
                             ok = false;
                             return false;
                           }
                         return true;
                       });
  return ok;
}

ProjectionResult project_through_last(
    const PointSequence& seq, const std::vector<std::size_t>& pivots) {
  const std::size_t d = seq.dim;
  require(d >= 2, ErrorCode::InvalidInput, "projection needs d >= 2");
  require(pivots.size() >= d + 1, ErrorCode::InsufficientInput,
          "projection needs at least d+1 pivots");

  const std::size_t apex = pivots.back();
  const Rational& apex_last = seq[apex].coords[d - 1];

  std::vector<std::size_t> above, below;
  for (std::size_t i = 0; i + 1 < pivots.size(); ++i) {
    const Rational& v = seq[pivots[i]].coords[d - 1];
    require(v != apex_last, ErrorCode::DegenerateInput,
            "shared last coordinate between pivots");
    (v > apex_last ? above : below).push_back(pivots[i]);
  }
  const bool keep_below = below.size() >= above.size();
  const std::vector<std::size_t>& q_side = keep_below ? below : above;

  // Separating height c: exact midpoint between the apex and the nearest
  // kept pivot in the last coordinate.
  const Rational* nearest = nullptr;
  for (std::size_t i : q_side) {
    const Rational& v = seq[i].coords[d - 1];
    if (!nearest || abs(v - apex_last) < abs(*nearest - apex_last))
      nearest = &seq[i].coords[d - 1];
  }
  Rational c = (apex_last + *nearest) / 2;

  ProjectionResult out;
  out.apex = apex;
  out.below = keep_below;
  out.source = q_side;
  out.projected.dim = d - 1;
  for (std::size_t i : q_side) {
    const Point& q = seq[i];
    Rational t = (c - apex_last) / (q.coords[d - 1] - apex_last);
    Point proj;
    proj.coords.resize(d - 1);
    for (std::size_t j = 0; j + 1 < d; ++j)
      proj.coords[j] =
          seq[apex].coords[j] + t * (q.coords[j] - seq[apex].coords[j]);
    out.projected.points.push_back(std::move(proj));
  }

  // Repair shared projected coordinates with unit-determinant shears; the
  // dimension-1 case cannot collide unless the input was degenerate.
  const std::size_t m = d - 1;
  for (std::size_t attempt = 0;; ++attempt) {
    GpStatus st = validate_general_position(out.projected);
    if (st.state == GpState::Degenerate &&
        st.witness.kind == DegeneracyWitness::Kind::Hyperplane) {
      std::vector<std::size_t> orig;
      for (std::size_t i : st.witness.indices) orig.push_back(out.source[i]);
      orig.push_back(apex);
      throw_zero(orig);
    }
    if (st.state != GpState::Degenerate) {
      out.projected.status = st;
      break;
    }
    require(m >= 2, ErrorCode::DegenerateInput,
            "collinear points through the apex");
    require(attempt < 64, ErrorCode::ProjectionRepairFailed,
            "could not restore coordinate distinctness");
    const std::size_t axis = st.witness.axis;
    // Row `axis` picks up t^k multiples of every other coordinate; some
    // small t leaves that axis collision-free because each clashing pair
    // pins only finitely many t.
    bool fixed = false;
    for (unsigned long t = 1; t <= 64 && !fixed; ++t) {
      std::vector<std::vector<Rational>> mat(
          m, std::vector<Rational>(m, Rational(0)));
      for (std::size_t i = 0; i < m; ++i) mat[i][i] = 1;
      Rational power(1);
      for (std::size_t j = 0; j < m; ++j) {
        if (j == axis) continue;
        power *= Rational(static_cast<long>(t));
        mat[axis][j] = power;
      }
      Point zero;
      zero.coords.assign(m, Rational(0));
      PointSequence cand =
          positive_linear_transform(out.projected, mat, zero);
      GpStatus cst = validate_general_position(cand);
      bool axis_clear =
          !(cst.state == GpState::Degenerate &&
            cst.witness.kind == DegeneracyWitness::Kind::SharedCoordinate &&
            cst.witness.axis == axis);
      if (axis_clear) {
        out.projected = std::move(cand);
        ++out.repairs;
        fixed = true;
      }
    }
    require(fixed, ErrorCode::ProjectionRepairFailed,
            "shear search exhausted");
  }
  return out;
}

ExtractionResult suk_extract(const PointSequence& seq, std::size_t target) {
  const std::size_t d = seq.dim;
  require(d >= 1, ErrorCode::InvalidInput, "dimension must be positive");
  require(seq.size() >= 1, ErrorCode::InvalidInput, "empty sequence");
  require(seq.status.state != GpState::Degenerate, ErrorCode::DegenerateInput,
          "sequence is degenerate: " + seq.status.witness.describe());

  if (d == 1) {
    std::vector<Rational> values;
    values.reserve(seq.size());
    for (const Point& p : seq.points) values.push_back(p.coords[0]);
    ExtractionResult res = monotone_extract(values, target);
    res.algorithm = "suk";
    return res;
  }
  if (d == 2) {
    ExtractionResult res = planar_homogeneous_extract(seq, target);
    res.algorithm = "suk";
    // same floor as below: any 3 points form a single homogeneous tuple
    if (res.size() < 3 && seq.size() >= 3) {
      res.indices = {0, 1, 2};
      auto rep = is_homogeneous(seq, res.indices);
      res.sign = rep.sign;
      res.verified = true;
    }
    return res;
  }

  ExtractionResult res;
  res.algorithm = "suk";
  if (seq.size() <= d) {
    res.indices.resize(seq.size());
    std::iota(res.indices.begin(), res.indices.end(), 0);
    return res;
  }

  // Floor: any d+1 points form a single tuple, hence a homogeneous set.
  ExtractionResult fallback;
  fallback.algorithm = "suk";
  fallback.indices.resize(d + 1);
  std::iota(fallback.indices.begin(), fallback.indices.end(), 0);
  {
    auto rep = is_homogeneous(seq, fallback.indices);
    fallback.sign = rep.sign;
    fallback.verified = true;
  }

  std::vector<std::size_t> pivots = refine_all(seq);
  if (pivots.size() >= d + 1) {
    ProjectionResult proj = project_through_last(seq, pivots);
    if (proj.projected.size() >= d) {
      ExtractionResult sub =
          suk_extract(proj.projected, target > 0 ? target - 1 : 0);
      res.indices.clear();
      for (std::size_t i : sub.indices)
        res.indices.push_back(proj.source[i]);
      res.indices.push_back(proj.apex);
      if (res.size() >= d + 1) {
        auto rep = is_homogeneous(seq, res.indices);
        require(rep.homogeneous, ErrorCode::InternalInvariantViolation,
                "pullback set failed homogeneity verification");
        res.sign = rep.sign;
        res.verified = true;
      }
    }
  }
  if (!res.verified || res.size() < fallback.size()) res = fallback;

  if (target >= d + 1) {
    BoundValue threshold = guarantee_threshold(d, target);
    if (threshold.kind == BoundValue::Kind::Exact &&
        Integer(static_cast<unsigned long>(seq.size())) >= threshold.value)
      require(res.size() >= target, ErrorCode::InternalInvariantViolation,
              "extraction guarantee violated");
  }
  return res;
}

}  // namespace ot
