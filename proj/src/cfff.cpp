// On-line cut + first fit with fill factor.
//
// Items in arrival order. With cut_limit >= 1, items no larger than b_max
// join a Next-Fit-with-Cuts stream of largest bins. Larger items have b_max
// pieces cut into full largest bins until the remainder fits; the remainder
// then goes to the first opened bin with room, else to a fresh largest bin if
// it is at most half of b_max, else to the smallest class whose capacity lies
// in [t, t/f], else to a fresh largest bin.
//
// With cut_limit 0 there is no stream: every item takes the remainder rule.

#include <optional>

#include "vscif/solvers.hpp"

namespace vscif {

namespace {

class CfffPacker {
 public:
  CfffPacker(const Instance& instance, FillFactor f, std::vector<RemainderPlacement>* trace)
      : classes_(instance.classes()), b_max_(instance.max_capacity()), f_(f), trace_(trace) {}

  void add(const Item& item, int cut_limit) {
    if (cut_limit == 0) {
      place_remainder(Fragment{item.id, 1, item.size});
      return;
    }
    if (item.size <= b_max_) {
      stream(item);
      return;
    }
    Size t = item.size;
    int piece = 0;
    while (t > b_max_) {
      put(open(0), Fragment{item.id, ++piece, b_max_});
      t -= b_max_;
    }
    place_remainder(Fragment{item.id, ++piece, t});
  }

  Packing take() { return std::move(packing_); }

 private:
  std::size_t open(std::size_t class_index) {
    packing_.bins.push_back(PackedBin{class_index, {}});
    loads_.push_back(0);
    return packing_.bins.size() - 1;
  }

  void put(std::size_t bin, const Fragment& f) {
    packing_.bins[bin].contents.push_back(f);
    loads_[bin] += f.size;
  }

  Size room(std::size_t bin) const {
    return classes_[packing_.bins[bin].class_index].capacity - loads_[bin];
  }

  // Next Fit with Cuts; each item is cut at most once since it fits b_max.
  void stream(const Item& item) {
    const Size free = stream_bin_ ? room(*stream_bin_) : 0;
    if (item.size <= free) {
      put(*stream_bin_, Fragment{item.id, 1, item.size});
      return;
    }
    int piece = 1;
    Size rest = item.size;
    if (free > 0) {
      put(*stream_bin_, Fragment{item.id, piece++, free});
      rest -= free;
    }
    stream_bin_ = open(0);
    put(*stream_bin_, Fragment{item.id, piece, rest});
  }

  void place_remainder(const Fragment& f) {
    const Size t = f.size;
    for (std::size_t b = 0; b < packing_.bins.size(); ++b) {
      if (room(b) >= t) {
        put(b, f);
        record(f, b, packing_.bins[b].class_index == 0 ? RemainderCategory::Y : RemainderCategory::Z);
        return;
      }
    }
    if (2 * t <= b_max_) {
      const auto b = open(0);
      put(b, f);
      record(f, b, RemainderCategory::Y);
      return;
    }
    // smallest capacity c with t <= c <= t / f, i.e. c * f <= t
    std::size_t chosen = 0;
    for (std::size_t l = classes_.size(); l-- > 0;) {
      const auto& c = classes_[l];
      if (c.capacity >= t && static_cast<Wide>(c.capacity) * f_.numerator() <=
                                 static_cast<Wide>(t) * f_.denominator()) {
        chosen = l;
        break;
      }
    }
    const auto b = open(chosen);
    put(b, f);
    record(f, b, chosen == 0 ? RemainderCategory::X : RemainderCategory::Z);
  }

  void record(const Fragment& f, std::size_t bin, RemainderCategory category) {
    if (trace_) trace_->push_back(RemainderPlacement{f.parent, f.size, bin, category});
  }

  const std::vector<BinClass>& classes_;
  Size b_max_;
  FillFactor f_;
  std::vector<RemainderPlacement>* trace_;
  Packing packing_;
  std::vector<Size> loads_;
  std::optional<std::size_t> stream_bin_;
};

}  // namespace

SolveResult solve_cfff(const Instance& instance, FillFactor f,
                       std::vector<RemainderPlacement>* trace) {
  CfffPacker packer(instance, f, trace);
  for (const auto& item : instance.items()) packer.add(item, instance.cut_limit());
  return make_result(packer.take(), instance);
}

}  // namespace vscif
