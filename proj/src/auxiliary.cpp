#include "vscif/auxiliary.hpp"

#include <algorithm>

namespace vscif {

namespace {

Packing to_packing(std::vector<std::vector<Fragment>> bins, std::size_t class_index) {
  Packing packing;
  packing.bins.reserve(bins.size());
  for (auto& contents : bins) packing.bins.push_back(PackedBin{class_index, std::move(contents)});
  return packing;
}

std::vector<Fragment> request_fragments(const UniformPackingRequest& request) {
  if (request.capacity < 1) raise(ErrorKind::Precondition, "capacity must be positive");
  std::vector<Fragment> fragments;
  fragments.reserve(request.sizes.size());
  for (std::size_t i = 0; i < request.sizes.size(); ++i) {
    fragments.push_back(Fragment{static_cast<ItemId>(i + 1), 1, request.sizes[i]});
  }
  return fragments;
}

}  // namespace

std::vector<std::vector<Fragment>> first_fit(std::span<const Fragment> fragments, Size capacity) {
  std::vector<std::vector<Fragment>> bins;
  std::vector<Size> loads;
  for (const auto& f : fragments) {
    if (f.size < 1) raise(ErrorKind::Precondition, "sizes must be positive");
    if (f.size > capacity) {
      raise(ErrorKind::Infeasible, "size " + std::to_string(f.size) + " exceeds capacity " +
                                       std::to_string(capacity));
    }
    std::size_t b = 0;
    while (b < bins.size() && loads[b] + f.size > capacity) ++b;
    if (b == bins.size()) {
      bins.emplace_back();
      loads.push_back(0);
    }
    bins[b].push_back(f);
    loads[b] += f.size;
  }
  return bins;
}

std::vector<std::vector<Fragment>> first_fit_decreasing(std::span<const Fragment> fragments,
                                                        Size capacity) {
  std::vector<Fragment> sorted(fragments.begin(), fragments.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Fragment& a, const Fragment& b) { return a.size > b.size; });
  return first_fit(sorted, capacity);
}

Packing pack_ff(const UniformPackingRequest& request) {
  return to_packing(first_fit(request_fragments(request), request.capacity), 0);
}

Packing pack_ffd(const UniformPackingRequest& request) {
  return to_packing(first_fit_decreasing(request_fragments(request), request.capacity), 0);
}

Packing pack_nfc(const Instance& instance) {
  const Size capacity = instance.max_capacity();
  if (instance.max_item_size() > capacity) {
    raise(ErrorKind::Precondition,
          "next fit with cuts needs every item to fit the largest bin (max item " +
              std::to_string(instance.max_item_size()) + ", capacity " +
              std::to_string(capacity) + ")");
  }
  const bool may_cut = instance.cut_limit() >= 1;

  Packing packing;
  Size room = 0;  // free space in the last opened bin
  auto open = [&] {
    packing.bins.push_back(PackedBin{0, {}});
    room = capacity;
  };
  for (const auto& item : instance.items()) {
    if (item.size <= room) {
      packing.bins.back().contents.push_back(Fragment{item.id, 1, item.size});
      room -= item.size;
      continue;
    }
    if (room > 0 && may_cut) {
      packing.bins.back().contents.push_back(Fragment{item.id, 1, room});
      const Size rest = item.size - room;
      open();
      packing.bins.back().contents.push_back(Fragment{item.id, 2, rest});
      room -= rest;
      continue;
    }
    open();
    packing.bins.back().contents.push_back(Fragment{item.id, 1, item.size});
    room -= item.size;
  }
  return packing;
}

std::vector<Size> split_even(Size size, int parts) {
  if (parts < 1 || size < parts) raise(ErrorKind::Precondition, "cannot split size into parts");
  std::vector<Size> pieces(static_cast<std::size_t>(parts), size / parts);
  const auto extra = static_cast<std::size_t>(size % parts);
  for (std::size_t i = 0; i < extra; ++i) ++pieces[i];
  return pieces;
}

Packing pack_cff(const Instance& instance) {
  const Size capacity = instance.max_capacity();
  std::vector<Fragment> fragments;
  for (const auto& item : instance.items()) {
    int parts = 1;
    while (ceil_div(item.size, parts) > capacity) ++parts;
    // Instance construction guarantees parts <= cut_limit + 1.
    const auto pieces = split_even(item.size, parts);
    for (std::size_t p = 0; p < pieces.size(); ++p)
      fragments.push_back(Fragment{item.id, static_cast<int>(p + 1), pieces[p]});
  }
  return to_packing(first_fit(fragments, capacity), 0);
}

}  // namespace vscif
