#pragma once

#include <cstdint>
#include <optional>

#include "vscif/core.hpp"
#include "vscif/solvers.hpp"

namespace vscif {

struct ExactLimits {
  int max_items = 5;
  Size max_size = 12;
  int max_classes = 3;
  int max_cuts = 2;
  std::uint64_t node_budget = 50'000'000;
  // Off only in tests: enumerates ordered compositions and lets pieces of one
  // item share a bin.
  bool symmetry_pruning = true;
};

enum class ExactStatus { Optimal, BudgetExceeded, LimitsExceeded };

struct ExactOutcome {
  ExactStatus status = ExactStatus::Optimal;
  Cost value = 0;  // minimum cost, or minimum bin count for min_bins_exact
  std::optional<SolveResult> solution;
  std::uint64_t nodes = 0;
};

// Branch and bound over all fragmentations and assignments. Never returns a
// non-optimal value: instances outside `limits` are refused and a search that
// exhausts the node budget reports BudgetExceeded.
ExactOutcome solve_exact(const Instance& instance, const ExactLimits& limits = {});

// Same search, minimizing the number of opened bins.
ExactOutcome min_bins_exact(const Instance& instance, const ExactLimits& limits = {});

}  // namespace vscif
