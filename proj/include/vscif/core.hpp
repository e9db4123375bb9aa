#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vscif/error.hpp"

namespace vscif {

using Size = std::int64_t;
using Cost = std::int64_t;
// 128-bit intermediate for products of sizes and costs
__extension__ using Wide = __int128;
using ItemId = std::int32_t;  // 1-based, dense

struct Item {
  ItemId id = 0;
  Size size = 0;
};

struct BinClass {
  Size capacity = 0;
  Cost cost = 0;

  friend bool operator==(const BinClass&, const BinClass&) = default;
};

enum class CostModel { Linear, Monotone };

std::string_view to_string(CostModel model);
CostModel parse_cost_model(std::string_view text);

// An immutable, validated problem instance. Bin classes are kept sorted by
// strictly decreasing capacity; items are numbered 1..n in input order.
//
// Construction enforces:
//  - positive sizes, capacities and costs, distinct capacities;
//  - the cost model (Linear: cost == capacity; Monotone: a larger bin is never
//    cheaper in absolute cost and never dearer per unit of capacity);
//  - feasibility: every item split into cut_limit+1 near-equal pieces fits
//    the largest bin, i.e. ceil(size / (cut_limit+1)) <= max capacity.
class Instance {
 public:
  Instance(std::vector<Size> sizes, std::vector<BinClass> classes,
           int cut_limit, CostModel cost_model,
           std::optional<Cost> known_optimum = std::nullopt);

  const std::vector<Item>& items() const noexcept { return items_; }
  const std::vector<BinClass>& classes() const noexcept { return classes_; }
  int cut_limit() const noexcept { return cut_limit_; }
  CostModel cost_model() const noexcept { return cost_model_; }
  std::optional<Cost> known_optimum() const noexcept { return known_optimum_; }

  std::size_t item_count() const noexcept { return items_.size(); }
  Size max_capacity() const noexcept { return classes_.front().capacity; }
  const BinClass& largest_class() const noexcept { return classes_.front(); }
  Size max_item_size() const noexcept { return max_item_size_; }

  // Precondition: 1 <= id <= item_count().
  Size size_of(ItemId id) const { return items_.at(static_cast<std::size_t>(id) - 1).size; }

 private:
  std::vector<Item> items_;
  std::vector<BinClass> classes_;
  int cut_limit_ = 0;
  CostModel cost_model_ = CostModel::Linear;
  std::optional<Cost> known_optimum_;
  Size max_item_size_ = 0;
};

// A piece of an item; piece indices are 1-based ordinals within the parent.
struct Fragment {
  ItemId parent = 0;
  int piece = 1;
  Size size = 0;

  friend bool operator==(const Fragment&, const Fragment&) = default;
};

struct PackedBin {
  std::size_t class_index = 0;
  std::vector<Fragment> contents;

  Size load() const;

  friend bool operator==(const PackedBin&, const PackedBin&) = default;
};

struct Packing {
  std::vector<PackedBin> bins;

  friend bool operator==(const Packing&, const Packing&) = default;
};

// Sum of the class costs of all opened bins. Throws Structural on an invalid
// class index or on overflow.
Cost total_cost(const Packing& packing, const Instance& instance);

Size item_mass(const Instance& instance);

// Violation categories, listed in the order verify_packing checks them.
enum class ViolationKind {
  InvalidClass,
  CapacityOverflow,
  MassMismatch,
  CutLimitExceeded,
  UnknownItem,
  EmptyBin,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct Verdict {
  std::optional<Violation> violation;
  Cost cost = 0;  // meaningful only when valid

  bool valid() const noexcept { return !violation.has_value(); }
};

// Independent checker: recomputes loads, per-item mass and fragment counts
// from the packing alone and reports the first violation found.
Verdict verify_packing(const Packing& packing, const Instance& instance);

// Checked arithmetic used across the library.
Size checked_add(Size a, Size b);
Size checked_mul(Size a, Size b);
Size ceil_div(Size a, Size b);

}  // namespace vscif
