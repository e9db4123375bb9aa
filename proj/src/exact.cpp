// Exhaustive branch and bound for tiny instances.
//
// Items are taken in decreasing size. For each item every split into at most
// cut_limit+1 parts (each <= b_max) is enumerated, and every assignment of the
// parts to open bins or to one new bin is tried. Bins carry no class during
// the search: a bin's cost is that of the cheapest class holding its load,
// which never decreases as the load grows.
//
// With symmetry pruning, parts are non-increasing, parts of one item go to
// distinct bins and equal parts take increasing bin indices. Two parts of one
// item sharing a bin are equivalent to a split with fewer parts, so no optimum
// is lost.
//
// Lower bound: cost already committed by open bins, plus the cheapest set of
// classes whose capacities cover the remaining mass that cannot fit into their
// headroom (up to b_max). The cover cost comes from a small DP over mass; for
// very large masses it falls back to the lowest unit cost of any class.

#include "vscif/exact.hpp"

#include <algorithm>
#include <limits>

namespace vscif {

namespace {

enum class Objective { Cost, Bins };

struct BudgetExhausted {};
struct BoundReached {};

class ExactSearch {
 public:
  ExactSearch(const Instance& instance, const ExactLimits& limits, Objective objective)
      : instance_(instance),
        classes_(instance.classes()),
        b_max_(instance.max_capacity()),
        max_parts_(instance.cut_limit() + 1),
        limits_(limits),
        objective_(objective) {
    order_ = instance.items();
    std::stable_sort(order_.begin(), order_.end(),
                     [](const Item& a, const Item& b) { return a.size > b.size; });
    suffix_mass_.assign(order_.size() + 1, 0);
    parts_.resize(order_.size());
    bins_of_parts_.resize(order_.size());
    for (std::size_t k = order_.size(); k-- > 0;)
      suffix_mass_[k] = suffix_mass_[k + 1] + order_[k].size;

    // lowest unit cost c/b over all classes
    unit_num_ = classes_[0].cost;
    unit_den_ = classes_[0].capacity;
    for (const auto& c : classes_) {
      if (static_cast<Wide>(c.cost) * unit_den_ < static_cast<Wide>(unit_num_) * c.capacity) {
        unit_num_ = c.cost;
        unit_den_ = c.capacity;
      }
    }
    if (objective_ == Objective::Cost && suffix_mass_[0] <= kCoverTableLimit) {
      cover_.assign(static_cast<std::size_t>(suffix_mass_[0]) + 1, 0);
      for (std::size_t x = 1; x < cover_.size(); ++x) {
        Cost best = std::numeric_limits<Cost>::max();
        for (const auto& c : classes_) {
          const auto rest = x > static_cast<std::size_t>(c.capacity) ? x - static_cast<std::size_t>(c.capacity) : 0;
          best = std::min(best, c.cost + cover_[rest]);
        }
        cover_[x] = best;
      }
    }
    mass_bound_ = objective_ == Objective::Cost ? priced(suffix_mass_[0]) : ceil_div(suffix_mass_[0], b_max_);
  }

  ExactOutcome run() {
    ExactOutcome outcome;
    try {
      branch_item(0);
    } catch (const BoundReached&) {
      // incumbent meets the root lower bound: optimal
    } catch (const BudgetExhausted&) {
      outcome.status = ExactStatus::BudgetExceeded;
      outcome.nodes = nodes_;
      return outcome;
    }
    outcome.status = ExactStatus::Optimal;
    outcome.nodes = nodes_;
    outcome.value = best_value_;
    outcome.solution = make_result(build_packing(), instance_);
    return outcome;
  }

 private:
  struct Placement {
    ItemId item;
    Size size;
    std::size_t bin;
  };

  Cost priced(Size mass) const {
    if (static_cast<std::size_t>(mass) < cover_.size()) return cover_[static_cast<std::size_t>(mass)];
    // ceil(mass * unit_num / unit_den)
    const Wide num = static_cast<Wide>(mass) * unit_num_;
    return static_cast<Cost>((num + unit_den_ - 1) / unit_den_);
  }

  // Cheapest class holding `load`; ties go to the smaller capacity.
  std::size_t cheapest_class(Size load) const {
    std::size_t best = 0;
    for (std::size_t l = 0; l < classes_.size(); ++l) {
      if (classes_[l].capacity < load) break;
      if (classes_[l].cost <= classes_[best].cost) best = l;
    }
    return best;
  }

  Cost value_of_bins() const {
    if (objective_ == Objective::Bins) return static_cast<Cost>(loads_.size());
    Cost sum = 0;
    for (const auto load : loads_) sum += classes_[cheapest_class(load)].cost;
    return sum;
  }

  Cost lower_bound(std::size_t k) const {
    Size headroom = 0;
    for (const auto load : loads_) headroom += b_max_ - load;
    const Size overflow = std::max<Size>(0, suffix_mass_[k] - headroom);
    Cost bound = value_of_bins();
    bound += objective_ == Objective::Cost ? priced(overflow) : ceil_div(overflow, b_max_);
    return std::max(bound, mass_bound_);
  }

  void branch_item(std::size_t k) {
    if (++nodes_ > limits_.node_budget) throw BudgetExhausted{};
    if (k == order_.size()) {
      const Cost value = value_of_bins();
      if (value < best_value_) {
        best_value_ = value;
        best_placements_ = placements_;
        if (best_value_ <= mass_bound_) throw BoundReached{};
      }
      return;
    }
    if (lower_bound(k) >= best_value_) return;

    const Size size = order_[k].size;
    const int most = static_cast<int>(std::min<Size>(max_parts_, size));
    for (int count = 1; count <= most; ++count) {
      if (ceil_div(size, count) > b_max_) continue;
      parts_[k].assign(static_cast<std::size_t>(count), 0);
      split(k, size, 0, std::min(size, b_max_));
      if (lower_bound(k) >= best_value_) return;
    }
  }

  // Fills parts_[k][index..] with positive values summing to `remaining`. With
  // pruning the sequence is non-increasing (each part <= `cap`).
  void split(std::size_t k, Size remaining, std::size_t index, Size cap) {
    auto& parts = parts_[k];
    const auto count = parts.size();
    if (index + 1 == count) {
      if (remaining > cap || remaining < 1) return;
      parts[index] = remaining;
      bins_of_parts_[k].assign(count, 0);
      assign(k, 0);
      return;
    }
    const Size slots_after = static_cast<Size>(count - index - 1);
    const Size upper = std::min(cap, remaining - slots_after);
    for (Size p = upper; p >= 1; --p) {
      if (limits_.symmetry_pruning && p * static_cast<Size>(count - index) < remaining) break;
      parts[index] = p;
      split(k, remaining - p, index + 1, limits_.symmetry_pruning ? p : std::min(remaining, b_max_));
    }
  }

  void assign(std::size_t k, std::size_t index) {
    const auto& parts = parts_[k];
    if (index == parts.size()) {
      branch_item(k + 1);
      return;
    }
    const Size p = parts[index];
    std::size_t start = 0;
    if (limits_.symmetry_pruning && index > 0 && parts[index] == parts[index - 1])
      start = bins_of_parts_[k][index - 1] + 1;
    const std::size_t open_bins = loads_.size();
    for (std::size_t b = start; b < open_bins; ++b) {
      if (loads_[b] + p > b_max_) continue;
      if (limits_.symmetry_pruning && holds_part_of_item(k, b, index)) continue;
      place(k, index, b, p);
      assign(k, index + 1);
      unplace(b, p);
    }
    loads_.push_back(0);
    place(k, index, open_bins, p);
    assign(k, index + 1);
    unplace(open_bins, p);
    loads_.pop_back();
  }

  bool holds_part_of_item(std::size_t k, std::size_t bin, std::size_t index) const {
    for (std::size_t i = 0; i < index; ++i)
      if (bins_of_parts_[k][i] == bin) return true;
    return false;
  }

  void place(std::size_t k, std::size_t index, std::size_t bin, Size p) {
    loads_[bin] += p;
    bins_of_parts_[k][index] = bin;
    placements_.push_back(Placement{order_[k].id, p, bin});
  }

  void unplace(std::size_t bin, Size p) {
    loads_[bin] -= p;
    placements_.pop_back();
  }

  Packing build_packing() const {
    std::size_t bin_count = 0;
    for (const auto& pl : best_placements_) bin_count = std::max(bin_count, pl.bin + 1);
    std::vector<Size> loads(bin_count, 0);
    for (const auto& pl : best_placements_) loads[pl.bin] += pl.size;

    Packing packing;
    packing.bins.resize(bin_count);
    for (std::size_t b = 0; b < bin_count; ++b) packing.bins[b].class_index = cheapest_class(loads[b]);
    std::vector<int> pieces(instance_.item_count(), 0);
    for (const auto& pl : best_placements_) {
      const int piece = ++pieces[static_cast<std::size_t>(pl.item) - 1];
      packing.bins[pl.bin].contents.push_back(Fragment{pl.item, piece, pl.size});
    }
    return packing;
  }

  const Instance& instance_;
  const std::vector<BinClass>& classes_;
  Size b_max_;
  int max_parts_;
  ExactLimits limits_;
  Objective objective_;

  std::vector<Item> order_;
  std::vector<Size> suffix_mass_;
  Cost unit_num_ = 1;
  Size unit_den_ = 1;
  Cost mass_bound_ = 0;
  static constexpr Size kCoverTableLimit = 1 << 22;
  std::vector<Cost> cover_;  // cheapest class multiset with capacity >= index

  std::vector<Size> loads_;
  // per item depth: the current split and the bin of each part
  std::vector<std::vector<Size>> parts_;
  std::vector<std::vector<std::size_t>> bins_of_parts_;
  std::vector<Placement> placements_;

  Cost best_value_ = std::numeric_limits<Cost>::max();
  std::vector<Placement> best_placements_;
  std::uint64_t nodes_ = 0;
};

std::optional<std::string> limits_violation(const Instance& instance, const ExactLimits& limits) {
  if (static_cast<long long>(instance.item_count()) > limits.max_items)
    return "more than " + std::to_string(limits.max_items) + " items";
  if (instance.max_item_size() > limits.max_size)
    return "item size above " + std::to_string(limits.max_size);
  if (static_cast<long long>(instance.classes().size()) > limits.max_classes)
    return "more than " + std::to_string(limits.max_classes) + " bin classes";
  if (instance.cut_limit() > limits.max_cuts)
    return "cut limit above " + std::to_string(limits.max_cuts);
  return std::nullopt;
}

ExactOutcome run_exact(const Instance& instance, const ExactLimits& limits, Objective objective) {
  if (limits.max_items < 1 || limits.max_size < 1 || limits.max_classes < 1 ||
      limits.max_cuts < 0 || limits.node_budget < 1)
    raise(ErrorKind::Config, "exact search limits must be positive");
  if (limits_violation(instance, limits)) {
    ExactOutcome refused;
    refused.status = ExactStatus::LimitsExceeded;
    return refused;
  }
  ExactSearch search(instance, limits, objective);
  return search.run();
}

}  // namespace

ExactOutcome solve_exact(const Instance& instance, const ExactLimits& limits) {
  return run_exact(instance, limits, Objective::Cost);
}

ExactOutcome min_bins_exact(const Instance& instance, const ExactLimits& limits) {
  return run_exact(instance, limits, Objective::Bins);
}

}  // namespace vscif
