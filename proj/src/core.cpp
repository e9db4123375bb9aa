#include "vscif/core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace vscif {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Structural: return "structural";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Config: return "config";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::LimitsExceeded: return "limits-exceeded";
  }
  return "unknown";
}

void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

Size checked_add(Size a, Size b) {
  Size out = 0;
  if (__builtin_add_overflow(a, b, &out)) raise(ErrorKind::Structural, "integer overflow");
  return out;
}

Size checked_mul(Size a, Size b) {
  Size out = 0;
  if (__builtin_mul_overflow(a, b, &out)) raise(ErrorKind::Structural, "integer overflow");
  return out;
}

Size ceil_div(Size a, Size b) { return a / b + (a % b != 0 ? 1 : 0); }

std::string_view to_string(CostModel model) {
  return model == CostModel::Linear ? "linear" : "monotone";
}

CostModel parse_cost_model(std::string_view text) {
  if (text == "linear") return CostModel::Linear;
  if (text == "monotone") return CostModel::Monotone;
  raise(ErrorKind::Parse, "unknown cost model '" + std::string(text) + "'");
}

namespace {

void check_cost_model(const std::vector<BinClass>& classes, CostModel model) {
  if (model == CostModel::Linear) {
    for (const auto& c : classes) {
      if (c.cost != c.capacity) {
        std::ostringstream msg;
        msg << "linear cost model requires cost == capacity, class (" << c.capacity
            << ", " << c.cost << ")";
        raise(ErrorKind::Structural, msg.str());
      }
    }
    return;
  }
  // classes are sorted by decreasing capacity: i < j  =>  b_i > b_j
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      const auto& big = classes[i];
      const auto& small = classes[j];
      const Wide lhs = static_cast<Wide>(big.cost) * small.capacity;
      const Wide rhs = static_cast<Wide>(small.cost) * big.capacity;
      if (lhs > rhs || small.cost > big.cost) {
        std::ostringstream msg;
        msg << "monotone cost model violated between classes (" << big.capacity << ", "
            << big.cost << ") and (" << small.capacity << ", " << small.cost << ")";
        raise(ErrorKind::Structural, msg.str());
      }
    }
  }
}

}  // namespace

Instance::Instance(std::vector<Size> sizes, std::vector<BinClass> classes, int cut_limit,
                   CostModel cost_model, std::optional<Cost> known_optimum)
    : classes_(std::move(classes)),
      cut_limit_(cut_limit),
      cost_model_(cost_model),
      known_optimum_(known_optimum) {
  if (classes_.empty()) raise(ErrorKind::Structural, "at least one bin class is required");
  if (cut_limit_ < 0) raise(ErrorKind::Structural, "cut limit must be non-negative");
  if (sizes.size() > static_cast<std::size_t>(std::numeric_limits<ItemId>::max()))
    raise(ErrorKind::Structural, "too many items");
  for (const auto& c : classes_) {
    if (c.capacity < 1 || c.cost < 1)
      raise(ErrorKind::Structural, "bin capacities and costs must be positive");
  }
  std::stable_sort(classes_.begin(), classes_.end(),
                   [](const BinClass& a, const BinClass& b) { return a.capacity > b.capacity; });
  for (std::size_t i = 1; i < classes_.size(); ++i) {
    if (classes_[i].capacity == classes_[i - 1].capacity)
      raise(ErrorKind::Structural,
            "duplicate bin capacity " + std::to_string(classes_[i].capacity));
  }
  check_cost_model(classes_, cost_model_);
  if (known_optimum_ && *known_optimum_ < 1)
    raise(ErrorKind::Structural, "known optimum must be positive");

  items_.reserve(sizes.size());
  Size mass = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) raise(ErrorKind::Structural, "item sizes must be positive");
    mass = checked_add(mass, sizes[i]);
    max_item_size_ = std::max(max_item_size_, sizes[i]);
    items_.push_back(Item{static_cast<ItemId>(i + 1), sizes[i]});
  }

  const Size pieces = static_cast<Size>(cut_limit_) + 1;
  if (!items_.empty() && ceil_div(max_item_size_, pieces) > max_capacity()) {
    std::ostringstream msg;
    msg << "item of size " << max_item_size_ << " cannot be cut into " << pieces
        << " pieces fitting the largest bin (" << max_capacity() << ")";
    raise(ErrorKind::Infeasible, msg.str());
  }
}

Size PackedBin::load() const {
  Size sum = 0;
  for (const auto& f : contents) sum = checked_add(sum, f.size);
  return sum;
}

Cost total_cost(const Packing& packing, const Instance& instance) {
  Cost sum = 0;
  for (const auto& bin : packing.bins) {
    if (bin.class_index >= instance.classes().size())
      raise(ErrorKind::Structural, "invalid class index " + std::to_string(bin.class_index));
    sum = checked_add(sum, instance.classes()[bin.class_index].cost);
  }
  return sum;
}

Size item_mass(const Instance& instance) {
  Size sum = 0;
  for (const auto& item : instance.items()) sum = checked_add(sum, item.size);
  return sum;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::InvalidClass: return "invalid-class";
    case ViolationKind::CapacityOverflow: return "capacity-overflow";
    case ViolationKind::MassMismatch: return "mass-mismatch";
    case ViolationKind::CutLimitExceeded: return "cut-limit-exceeded";
    case ViolationKind::UnknownItem: return "unknown-item";
    case ViolationKind::EmptyBin: return "empty-bin";
  }
  return "unknown";
}

Verdict verify_packing(const Packing& packing, const Instance& instance) {
  auto fail = [](ViolationKind kind, std::string detail) {
    return Verdict{Violation{kind, std::move(detail)}, 0};
  };
  const auto& classes = instance.classes();
  const auto n = static_cast<ItemId>(instance.item_count());

  for (std::size_t b = 0; b < packing.bins.size(); ++b) {
    if (packing.bins[b].class_index >= classes.size())
      return fail(ViolationKind::InvalidClass,
                  "bin " + std::to_string(b) + " has class index " +
                      std::to_string(packing.bins[b].class_index));
  }

  // Sums are accumulated in 128 bits so hostile input cannot wrap.
  for (std::size_t b = 0; b < packing.bins.size(); ++b) {
    const auto& bin = packing.bins[b];
    Wide load = 0;
    for (const auto& f : bin.contents) load += f.size;
    if (load > classes[bin.class_index].capacity) {
      return fail(ViolationKind::CapacityOverflow,
                  "bin " + std::to_string(b) + " holds " + std::to_string(static_cast<long long>(load)) +
                      " > capacity " + std::to_string(classes[bin.class_index].capacity));
    }
  }

  std::vector<Wide> mass(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::int64_t> count(static_cast<std::size_t>(n) + 1, 0);
  bool bad_fragment = false;
  for (const auto& bin : packing.bins) {
    for (const auto& f : bin.contents) {
      if (f.size < 1) bad_fragment = true;
      if (f.parent >= 1 && f.parent <= n) {
        mass[static_cast<std::size_t>(f.parent)] += f.size;
        ++count[static_cast<std::size_t>(f.parent)];
      }
    }
  }
  if (bad_fragment) return fail(ViolationKind::MassMismatch, "fragment with non-positive size");
  for (const auto& item : instance.items()) {
    const auto got = mass[static_cast<std::size_t>(item.id)];
    if (got != item.size) {
      return fail(ViolationKind::MassMismatch,
                  "item " + std::to_string(item.id) + " has size " + std::to_string(item.size) +
                      " but fragments sum to " + std::to_string(static_cast<long long>(got)));
    }
  }
  for (const auto& item : instance.items()) {
    const auto cuts = count[static_cast<std::size_t>(item.id)] - 1;
    if (cuts > instance.cut_limit()) {
      return fail(ViolationKind::CutLimitExceeded,
                  "item " + std::to_string(item.id) + " cut " + std::to_string(cuts) +
                      " times, limit " + std::to_string(instance.cut_limit()));
    }
  }
  for (const auto& bin : packing.bins) {
    for (const auto& f : bin.contents) {
      if (f.parent < 1 || f.parent > n)
        return fail(ViolationKind::UnknownItem, "fragment of unknown item " + std::to_string(f.parent));
    }
  }
  for (std::size_t b = 0; b < packing.bins.size(); ++b) {
    if (packing.bins[b].contents.empty())
      return fail(ViolationKind::EmptyBin, "bin " + std::to_string(b) + " is empty");
  }

  Cost cost = 0;
  for (const auto& bin : packing.bins) cost = checked_add(cost, classes[bin.class_index].cost);
  return Verdict{std::nullopt, cost};
}

}  // namespace vscif
