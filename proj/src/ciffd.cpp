// Off-line cut + iterative first-fit-decreasing.
//
// 1. Items larger than the largest capacity b_1 have b_1-sized pieces cut off
//    into their own (full) bins until the remainder fits b_1.
// 2. Remaining items and remainders are packed FFD into b_1 bins.
// 3. For each smaller class j, a copy of the best packing so far has its
//    least-filled class j-1 bin emptied; that content is re-split against b_j
//    within the cut budget and packed FFD into b_j bins. The copy replaces the
//    best packing only when strictly cheaper.
// 4. Every non-full bin of the best packing, largest first, is moved into the
//    smallest class that holds its content.

#include <algorithm>
#include <numeric>

#include "vscif/auxiliary.hpp"
#include "vscif/solvers.hpp"

namespace vscif {

namespace {

struct WorkingPacking {
  std::vector<PackedBin> bins;
  std::vector<Size> loads;
  std::vector<int> fragments;  // per item, index id - 1

  void add_bin(std::size_t class_index, std::vector<Fragment> contents) {
    Size load = 0;
    for (const auto& f : contents) load += f.size;
    bins.push_back(PackedBin{class_index, std::move(contents)});
    loads.push_back(load);
  }

  Cost cost(const std::vector<BinClass>& classes) const {
    Cost sum = 0;
    for (const auto& bin : bins) sum = checked_add(sum, classes[bin.class_index].cost);
    return sum;
  }
};

// Cuts capacity-sized pieces off `f` into fresh full bins of `class_index`
// until what is left fits. Returns false when the item's cut budget runs out
// first; the working packing is then unusable.
bool cut_to_fit(WorkingPacking& work, Fragment& f, std::size_t class_index, Size capacity,
                int cut_limit) {
  auto& count = work.fragments[static_cast<std::size_t>(f.parent) - 1];
  while (f.size > capacity) {
    if (count - 1 >= cut_limit) return false;
    ++count;
    work.add_bin(class_index, {Fragment{f.parent, count, capacity}});
    f.size -= capacity;
  }
  return true;
}

void pack_ffd_into(WorkingPacking& work, const std::vector<Fragment>& pool,
                   std::size_t class_index, Size capacity) {
  for (auto& contents : first_fit_decreasing(pool, capacity))
    work.add_bin(class_index, std::move(contents));
}

}  // namespace

SolveResult solve_ciffd(const Instance& instance, CiffdTrace* trace) {
  const auto& classes = instance.classes();
  const int cut_limit = instance.cut_limit();

  WorkingPacking best;
  best.fragments.assign(instance.item_count(), 1);

  std::vector<Fragment> pool;
  for (const auto& item : instance.items()) {
    Fragment f{item.id, 1, item.size};
    if (!cut_to_fit(best, f, 0, classes[0].capacity, cut_limit)) {
      // Unreachable for a constructed Instance: feasibility was checked there.
      raise(ErrorKind::Infeasible, "item " + std::to_string(item.id) + " needs more than " +
                                       std::to_string(cut_limit) + " cuts");
    }
    pool.push_back(f);
  }
  pack_ffd_into(best, pool, 0, classes[0].capacity);
  Cost best_cost = best.cost(classes);
  if (trace) {
    trace->round_costs.push_back(best_cost);
    trace->round_skipped.push_back(false);
  }

  for (std::size_t j = 1; j < classes.size(); ++j) {
    WorkingPacking work = best;
    const std::size_t previous = j - 1;

    std::optional<std::size_t> emptied;
    for (std::size_t b = 0; b < work.bins.size(); ++b) {
      if (work.bins[b].class_index != previous) continue;
      if (!emptied || work.loads[b] <= work.loads[*emptied]) emptied = b;
    }
    bool skipped = !emptied.has_value();

    if (!skipped) {
      auto contents = std::move(work.bins[*emptied].contents);
      work.bins.erase(work.bins.begin() + static_cast<std::ptrdiff_t>(*emptied));
      work.loads.erase(work.loads.begin() + static_cast<std::ptrdiff_t>(*emptied));

      pool.clear();
      for (auto f : contents) {
        if (!cut_to_fit(work, f, j, classes[j].capacity, cut_limit)) {
          skipped = true;
          break;
        }
        pool.push_back(f);
      }
      if (!skipped) pack_ffd_into(work, pool, j, classes[j].capacity);
    }

    if (skipped) {
      if (trace) {
        trace->round_costs.push_back(best_cost);
        trace->round_skipped.push_back(true);
      }
      continue;
    }
    const Cost cost = work.cost(classes);
    if (trace) {
      trace->round_costs.push_back(cost);
      trace->round_skipped.push_back(false);
    }
    if (cost < best_cost) {
      best = std::move(work);
      best_cost = cost;
    }
  }
  if (trace) trace->best_before_squeeze = best_cost;

  // Squeeze pass, bins visited by decreasing capacity.
  std::vector<std::size_t> order(best.bins.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return classes[best.bins[a].class_index].capacity > classes[best.bins[b].class_index].capacity;
  });
  for (const auto b : order) {
    auto& bin = best.bins[b];
    const auto& current = classes[bin.class_index];
    if (best.loads[b] >= current.capacity) continue;
    std::size_t smallest = bin.class_index;
    for (std::size_t l = classes.size(); l-- > 0;) {
      if (classes[l].capacity >= best.loads[b]) {
        smallest = l;
        break;
      }
    }
    if (smallest != bin.class_index && classes[smallest].cost <= current.cost)
      bin.class_index = smallest;
  }

  return make_result(Packing{std::move(best.bins)}, instance);
}

}  // namespace vscif
