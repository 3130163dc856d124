#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ot/rational.hpp"

namespace ot {

// Calls fn for every strictly increasing k-tuple from {0,...,n-1}, in
// lexicographic order. fn may return void, or bool (false stops early).
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if constexpr (std::is_void_v<decltype(fn(idx))>) {
      fn(idx);
    } else {
      if (!fn(idx)) return;
    }
    // advance
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace ot
