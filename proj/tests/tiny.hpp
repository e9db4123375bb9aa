#pragma once
// Random tiny instances for oracle comparisons.

#include <algorithm>
#include <random>
#include <set>

#include "oracle/brute_force.hpp"
#include "vscif/core.hpp"

namespace tiny {

struct Shape {
  int max_items = 5;
  vscif::Size max_size = 12;
  int max_classes = 3;
  int max_cuts = 2;
  bool whole_items_fit = false;  // every item <= largest capacity
  bool monotone = false;
};

inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline vscif::Instance make(std::mt19937_64& rng, const Shape& shape) {
  const int d = static_cast<int>(draw(rng, shape.whole_items_fit ? 1 : 0, shape.max_cuts));
  const int n = static_cast<int>(draw(rng, 1, shape.max_items));
  const int m = static_cast<int>(draw(rng, 1, shape.max_classes));

  // largest capacity must admit every item after at most d cuts
  const vscif::Size b_max = draw(rng, std::max<vscif::Size>(m, 3), shape.max_size);
  std::set<vscif::Size, std::greater<>> caps{b_max};
  while (static_cast<int>(caps.size()) < m) caps.insert(draw(rng, 1, b_max - 1));

  std::vector<vscif::BinClass> classes;
  for (const auto b : caps) {
    if (!shape.monotone || classes.empty()) {
      classes.push_back({b, shape.monotone ? b + draw(rng, 0, 3) : b});
      continue;
    }
    const auto& prev = classes.back();
    const vscif::Cost lo = std::max<vscif::Cost>(1, (prev.cost * b + prev.capacity - 1) / prev.capacity);
    classes.push_back({b, draw(rng, lo, prev.cost)});
  }

  const vscif::Size size_cap =
      std::min(shape.max_size, shape.whole_items_fit ? b_max : b_max * (d + 1));
  std::vector<vscif::Size> sizes;
  for (int i = 0; i < n; ++i) sizes.push_back(draw(rng, 1, size_cap));
  return vscif::Instance(sizes, classes, d,
                         shape.monotone ? vscif::CostModel::Monotone : vscif::CostModel::Linear);
}

inline std::vector<oracle::Int> sizes_of(const vscif::Instance& inst) {
  std::vector<oracle::Int> out;
  for (const auto& it : inst.items()) out.push_back(it.size);
  return out;
}

inline std::vector<oracle::Class> classes_of(const vscif::Instance& inst) {
  std::vector<oracle::Class> out;
  for (const auto& c : inst.classes()) out.push_back({c.capacity, c.cost});
  return out;
}

}  // namespace tiny
