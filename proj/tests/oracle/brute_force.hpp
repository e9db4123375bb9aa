#pragma once
// Test-only reference searches. Deliberately naive: plain recursion over set
// partitions, no bounds, no sharing with the library's branch and bound.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace oracle {

using Int = std::int64_t;

struct Class {
  Int capacity;
  Int cost;
};

namespace detail {

// Assign sizes[k..] to blocks (existing or one new), tracking block sums.
inline void partition_rec(const std::vector<Int>& sizes, std::size_t k, Int capacity,
                          std::vector<Int>& sums, Int& best) {
  if (k == sizes.size()) {
    best = std::min<Int>(best, static_cast<Int>(sums.size()));
    return;
  }
  // indices, not references: deeper calls grow `sums`
  for (std::size_t b = 0; b < sums.size(); ++b) {
    if (sums[b] + sizes[k] > capacity) continue;
    sums[b] += sizes[k];
    partition_rec(sizes, k + 1, capacity, sums, best);
    sums[b] -= sizes[k];
  }
  sums.push_back(sizes[k]);
  if (sizes[k] <= capacity) partition_rec(sizes, k + 1, capacity, sums, best);
  sums.pop_back();
}

// every way to write `n` as a non-increasing sum of at most `parts` positive terms
inline void splits_rec(Int n, Int cap, int parts, std::vector<Int>& cur,
                       std::vector<std::vector<Int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (parts == 0) return;
  for (Int p = std::min(n, cap); p >= 1; --p) {
    cur.push_back(p);
    splits_rec(n - p, p, parts - 1, cur, out);
    cur.pop_back();
  }
}

inline Int bin_cost(Int load, const std::vector<Class>& classes) {
  Int best = std::numeric_limits<Int>::max();
  for (const auto& c : classes)
    if (c.capacity >= load) best = std::min(best, c.cost);
  return best;
}

}  // namespace detail

// Minimum number of capacity-`capacity` bins holding `sizes` whole; -1 if
// some size does not fit at all.
inline Int min_bins_uncut(const std::vector<Int>& sizes, Int capacity) {
  for (const auto s : sizes)
    if (s > capacity) return -1;
  std::vector<Int> sums;
  Int best = std::numeric_limits<Int>::max();
  detail::partition_rec(sizes, 0, capacity, sums, best);
  return sizes.empty() ? 0 : best;
}

// Optimum of the fragmentation problem by full enumeration: every split of
// every item into at most cut_limit+1 parts, every set partition of all
// parts, each block priced at the cheapest class that holds it. With
// `count_bins` the block count is minimized instead.
inline Int optimum(const std::vector<Int>& sizes, const std::vector<Class>& classes,
                   int cut_limit, bool count_bins = false) {
  Int b_max = 0;
  for (const auto& c : classes) b_max = std::max(b_max, c.capacity);

  std::vector<std::vector<std::vector<Int>>> options(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::vector<Int> cur;
    detail::splits_rec(sizes[i], b_max, cut_limit + 1, cur, options[i]);
  }

  Int best = std::numeric_limits<Int>::max();
  std::vector<Int> parts;
  std::vector<Int> sums;

  auto price = [&] {
    if (count_bins) return static_cast<Int>(sums.size());
    Int total = 0;
    for (const auto s : sums) total += detail::bin_cost(s, classes);
    return total;
  };

  // recursion over parts -> blocks
  auto assign = [&](auto&& self, std::size_t k) -> void {
    if (k == parts.size()) {
      best = std::min(best, price());
      return;
    }
    for (std::size_t b = 0; b < sums.size(); ++b) {
      if (sums[b] + parts[k] > b_max) continue;
      sums[b] += parts[k];
      self(self, k + 1);
      sums[b] -= parts[k];
    }
    sums.push_back(parts[k]);
    self(self, k + 1);
    sums.pop_back();
  };

  // recursion over items -> chosen split
  auto choose = [&](auto&& self, std::size_t i) -> void {
    if (i == sizes.size()) {
      sums.clear();
      assign(assign, 0);
      return;
    }
    for (const auto& split : options[i]) {
      parts.insert(parts.end(), split.begin(), split.end());
      self(self, i + 1);
      parts.resize(parts.size() - split.size());
    }
  };
  choose(choose, 0);
  return sizes.empty() ? 0 : best;
}

}  // namespace oracle
