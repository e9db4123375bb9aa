// Greedy references: modulo-b_max cut, then Next Fit into largest bins.
// Full b_max pieces occupy a bin of their own and never displace the Next Fit
// bin; CDNFL sorts all pieces by decreasing size first.

#include <algorithm>

#include "vscif/solvers.hpp"

namespace vscif {

namespace {

std::vector<Fragment> modulo_cut(const Instance& instance) {
  const Size b_max = instance.max_capacity();
  std::vector<Fragment> pieces;
  for (const auto& item : instance.items()) {
    const Size full = item.size / b_max;
    const Size rest = item.size % b_max;
    const Size count = full + (rest > 0 ? 1 : 0);
    if (count - 1 > instance.cut_limit()) {
      raise(ErrorKind::Infeasible, "item " + std::to_string(item.id) + " needs " +
                                       std::to_string(count - 1) + " cuts, limit " +
                                       std::to_string(instance.cut_limit()));
    }
    int piece = 0;
    for (Size k = 0; k < full; ++k) pieces.push_back(Fragment{item.id, ++piece, b_max});
    if (rest > 0) pieces.push_back(Fragment{item.id, ++piece, rest});
  }
  return pieces;
}

Packing next_fit_largest(const std::vector<Fragment>& pieces, Size b_max) {
  Packing packing;
  std::optional<std::size_t> current;
  Size room = 0;
  for (const auto& f : pieces) {
    if (f.size == b_max) {
      packing.bins.push_back(PackedBin{0, {f}});
      continue;
    }
    if (!current || f.size > room) {
      packing.bins.push_back(PackedBin{0, {}});
      current = packing.bins.size() - 1;
      room = b_max;
    }
    packing.bins[*current].contents.push_back(f);
    room -= f.size;
  }
  return packing;
}

}  // namespace

SolveResult solve_cnfl(const Instance& instance) {
  return make_result(next_fit_largest(modulo_cut(instance), instance.max_capacity()), instance);
}

SolveResult solve_cdnfl(const Instance& instance) {
  auto pieces = modulo_cut(instance);
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const Fragment& a, const Fragment& b) { return a.size > b.size; });
  return make_result(next_fit_largest(pieces, instance.max_capacity()), instance);
}

}  // namespace vscif
