#pragma once

#include <span>
#include <vector>

#include "vscif/core.hpp"

namespace vscif {

// Classic one-dimensional packing on a single capacity. Returned packings use
// class_index 0 and fragment parent = 1-based position in `sizes`.
struct UniformPackingRequest {
  std::vector<Size> sizes;
  Size capacity = 0;
};

Packing pack_ff(const UniformPackingRequest& request);

// Stable sort by decreasing size, then First Fit.
Packing pack_ffd(const UniformPackingRequest& request);

// Next Fit with Cuts over bins of the largest class. Requires every item to
// fit the largest bin whole. With cut_limit 0 an overflowing item opens a new
// bin instead of being cut.
Packing pack_nfc(const Instance& instance);

// Cut and First Fit: each item is split into the fewest near-equal pieces
// that fit the largest bin (at most cut_limit+1), pieces are First-Fit packed
// into largest-class bins in input order.
Packing pack_cff(const Instance& instance);

// Near-equal split of `size` into `parts` pieces, larger pieces first.
std::vector<Size> split_even(Size size, int parts);

// Bin-content building blocks shared with the solvers.
std::vector<std::vector<Fragment>> first_fit(std::span<const Fragment> fragments,
                                             Size capacity);
std::vector<std::vector<Fragment>> first_fit_decreasing(
    std::span<const Fragment> fragments, Size capacity);

}  // namespace vscif
