#include "ot/order_type.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "ot/tuples.hpp"

namespace ot {

std::size_t OrderTypeSignature::plus_count() const {
  return std::count(signs.begin(), signs.end(), Sign::Positive);
}
std::size_t OrderTypeSignature::minus_count() const {
  return std::count(signs.begin(), signs.end(), Sign::Negative);
}

namespace {

void throw_degenerate(const std::vector<std::size_t>& tuple) {
  DegeneracyWitness w;
  w.kind = DegeneracyWitness::Kind::Hyperplane;
  w.indices = tuple;
  throw Error(ErrorCode::DegenerateInput,
              "degenerate input: " + w.describe());
}

}  // namespace

OrderTypeSignature signature(const PointSequence& seq, std::uint64_t budget,
                             unsigned threads) {
  const std::size_t n = seq.size();
  const std::size_t k = seq.dim + 1;
  // chi only cares about hyperplane degeneracies; shared coordinates do
  // not affect orientations.
  require(seq.status.state != GpState::Degenerate ||
              seq.status.witness.kind != DegeneracyWitness::Kind::Hyperplane,
          ErrorCode::DegenerateInput,
          "sequence is degenerate: " + seq.status.witness.describe());
  require(n >= k, ErrorCode::InvalidInput, "need at least d+1 points");

  Integer total = binomial(n, k);
  require(total <= Integer(static_cast<unsigned long>(budget)),
          ErrorCode::BudgetExceeded,
          "tuple count " + total.get_str() + " exceeds budget");
  const std::size_t count = total.get_ui();

  OrderTypeSignature sig;
  sig.dim = seq.dim;
  sig.n_points = n;
  sig.signs.assign(count, Sign::Zero);

  // Tuples starting with first index i0 form a contiguous lex block of
  // size C(n-1-i0, k-1); blocks are distributed over workers and written
  // into disjoint slices, so the merged result is thread-count independent.
  std::vector<std::size_t> block_offset(n - k + 2, 0);
  for (std::size_t i0 = 0; i0 + k <= n; ++i0)
    block_offset[i0 + 1] =
        block_offset[i0] + binomial(n - 1 - i0, k - 1).get_ui();

  std::vector<std::vector<std::size_t>> degenerate_hits;
  std::mutex deg_mutex;

  auto run_block = [&](std::size_t i0) {
    std::size_t pos = block_offset[i0];
    std::vector<std::size_t> tuple(k);
    tuple[0] = i0;
    for_each_combination(n - 1 - i0, k - 1,
                         [&](const std::vector<std::size_t>& rest) {
                           for (std::size_t j = 0; j + 1 < k; ++j)
                             tuple[j + 1] = rest[j] + i0 + 1;
                           Sign s = orientation_of(seq, tuple);
                           if (s == Sign::Zero) {
                             std::lock_guard lock(deg_mutex);
                             degenerate_hits.push_back(tuple);
                             return false;
                           }
                           sig.signs[pos++] = s;
                           return true;
                         });
  };

  const std::size_t nblocks = n - k + 1;
  if (threads <= 1 || nblocks <= 1) {
    for (std::size_t i0 = 0; i0 < nblocks; ++i0) run_block(i0);
  } else {
    unsigned nt = std::min<std::size_t>(threads, nblocks);
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < nt; ++t)
      pool.emplace_back([&] {
        for (std::size_t i0; (i0 = next.fetch_add(1)) < nblocks;)
          run_block(i0);
      });
    for (auto& th : pool) th.join();
  }

  if (!degenerate_hits.empty()) {
    // Report the lexicographically first witness for determinism.
    throw_degenerate(*std::min_element(degenerate_hits.begin(),
                                       degenerate_hits.end()));
  }
  return sig;
}

HomogeneityReport is_homogeneous(const PointSequence& seq,
                                 const std::vector<std::size_t>& indices) {
  const std::size_t k = seq.dim + 1;
  require(indices.size() >= k, ErrorCode::InvalidInput,
          "homogeneity needs at least d+1 indices");
  require(std::is_sorted(indices.begin(), indices.end()) &&
              std::adjacent_find(indices.begin(), indices.end()) ==
                  indices.end(),
          ErrorCode::InvalidInput, "indices must be strictly increasing");
  for (std::size_t i : indices)
    require(i < seq.size(), ErrorCode::InvalidInput, "index out of range");

  HomogeneityReport rep;
  std::vector<std::size_t> first_tuple;
  std::vector<std::size_t> tuple(k);
  bool done = false;
  for_each_combination(indices.size(), k,
                       [&](const std::vector<std::size_t>& pos) {
                         for (std::size_t j = 0; j < k; ++j)
                           tuple[j] = indices[pos[j]];
                         Sign s = orientation_of(seq, tuple);
                         if (s == Sign::Zero) throw_degenerate(tuple);
                         if (first_tuple.empty()) {
                           first_tuple = tuple;
                           rep.sign = s;
                           return true;
                         }
                         if (s != rep.sign) {
                           rep.homogeneous = false;
                           rep.tuple_a = first_tuple;
                           rep.tuple_b = tuple;
                           done = true;
                           return false;
                         }
                         return true;
                       });
  rep.homogeneous = !done;
  return rep;
}

namespace {

// Combinatorial rank of a strictly increasing k-tuple among all such
// tuples from {0..n-1}, lexicographic order.
std::size_t tuple_rank(const std::vector<std::size_t>& t, std::size_t n) {
  const std::size_t k = t.size();
  std::size_t rank = 0;
  std::size_t prev = 0;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t v = prev; v < t[j]; ++v)
      rank += binomial(n - 1 - v, k - 1 - j).get_ui();
    prev = t[j] + 1;
  }
  return rank;
}

struct BruteState {
  const OrderTypeSignature* sig;
  std::size_t n, k;
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best;
  Sign best_sign = Sign::Positive;

  bool compatible(std::size_t cand, Sign& sign) const {
    if (chosen.size() + 1 < k) return true;
    bool ok = true;
    std::vector<std::size_t> tuple(k);
    tuple[k - 1] = cand;
    for_each_combination(chosen.size(), k - 1,
                         [&](const std::vector<std::size_t>& pos) {
                           for (std::size_t j = 0; j + 1 < k; ++j)
                             tuple[j] = chosen[pos[j]];
                           Sign s = sig->signs[tuple_rank(tuple, n)];
                           if (sign == Sign::Zero) {
                             sign = s;
                             return true;
                           }
                           if (s != sign) {
                             ok = false;
                             return false;
                           }
                           return true;
                         });
    return ok;
  }

  void dfs(std::size_t next, Sign sign) {
    if (chosen.size() > best.size()) {
      best = chosen;
      best_sign = sign == Sign::Zero ? Sign::Positive : sign;
    }
    if (next >= n || chosen.size() + (n - next) <= best.size()) return;
    // include next (first, so the first maximum found is lex-smallest)
    Sign s = sign;
    if (compatible(next, s)) {
      chosen.push_back(next);
      dfs(next + 1, s);
      chosen.pop_back();
    }
    dfs(next + 1, sign);
  }
};

}  // namespace

ExtractionResult brute_force_max_homogeneous(const PointSequence& seq,
                                             std::size_t cap) {
  require(seq.size() <= cap, ErrorCode::BudgetExceeded,
          "brute-force cap exceeded");
  ExtractionResult res;
  res.algorithm = "brute";
  const std::size_t k = seq.dim + 1;
  if (seq.size() < k) {
    res.indices.resize(seq.size());
    std::iota(res.indices.begin(), res.indices.end(), 0);
    res.verified = false;
    return res;
  }
  OrderTypeSignature sig = signature(seq);
  BruteState st{&sig, seq.size(), k, {}, {}, Sign::Positive};
  st.dfs(0, Sign::Zero);
  res.indices = st.best;
  res.sign = st.best_sign;
  if (res.indices.size() >= k) {
    auto rep = is_homogeneous(seq, res.indices);
    require(rep.homogeneous && rep.sign == res.sign,
            ErrorCode::InternalInvariantViolation,
            "brute-force result failed verification");
    res.verified = true;
  }
  return res;
}

namespace {

// Enumerates the facets of the convex hull of the selected points as
// position subsets (positions into `indices`). General position makes all
// facets simplicial d-subsets.
std::vector<std::vector<std::size_t>> hull_facets(
    const PointSequence& seq, const std::vector<std::size_t>& indices) {
  const std::size_t d = seq.dim;
  const std::size_t k = indices.size();
  require(k >= d + 1, ErrorCode::InvalidInput,
          "need at least d+1 points for a hull");
  require(k <= 15 && d <= 5, ErrorCode::BudgetExceeded,
          "facet enumeration budget exceeded");

  std::vector<std::vector<std::size_t>> facets;
  std::vector<std::size_t> tuple(d + 1);
  for_each_combination(k, d, [&](const std::vector<std::size_t>& f) {
    Sign side = Sign::Zero;
    bool facet = true;
    for (std::size_t p = 0; p < k && facet; ++p) {
      if (std::binary_search(f.begin(), f.end(), p)) continue;
      for (std::size_t j = 0; j < d; ++j) tuple[j] = indices[f[j]];
      tuple[d] = indices[p];
      Sign s = orientation_of(seq, tuple);
      if (s == Sign::Zero) throw_degenerate(tuple);
      if (side == Sign::Zero)
        side = s;
      else if (s != side)
        facet = false;
    }
    if (facet) facets.push_back(f);
  });
  return facets;
}

}  // namespace

bool convex_position_check(const PointSequence& seq,
                           const std::vector<std::size_t>& indices) {
  auto facets = hull_facets(seq, indices);
  std::vector<bool> on_hull(indices.size(), false);
  for (const auto& f : facets)
    for (std::size_t p : f) on_hull[p] = true;
  return std::all_of(on_hull.begin(), on_hull.end(),
                     [](bool b) { return b; });
}

bool cyclic_polytope_check(const PointSequence& seq,
                           const std::vector<std::size_t>& indices) {
  auto facets = hull_facets(seq, indices);
  const std::size_t k = indices.size();
  // Gale evenness over positions in index order: any two positions outside
  // a facet must have an even number of facet elements strictly between
  // them. The condition is invariant under reversing the order, so index
  // order and its reverse accept together.
  for (const auto& f : facets) {
    std::vector<bool> in_f(k, false);
    for (std::size_t p : f) in_f[p] = true;
    std::vector<std::size_t> outside;
    for (std::size_t p = 0; p < k; ++p)
      if (!in_f[p]) outside.push_back(p);
    for (std::size_t a = 0; a < outside.size(); ++a)
      for (std::size_t b = a + 1; b < outside.size(); ++b) {
        std::size_t between = 0;
        for (std::size_t p : f)
          if (p > outside[a] && p < outside[b]) ++between;
        if (between % 2 != 0) return false;
      }
  }
  return true;
}

}  // namespace ot
