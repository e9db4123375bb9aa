#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vscif/core.hpp"

namespace vscif {

// Fill factor for CFFf, stored as an exact fraction in [1/2, 1].
class FillFactor {
 public:
  FillFactor() = default;
  FillFactor(std::int64_t numerator, std::int64_t denominator);

  // Accepts decimal text such as "0.5", "0.75", "1".
  static FillFactor parse(std::string_view text);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const FillFactor&, const FillFactor&) = default;

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 2;
};

struct SolveResult {
  Packing packing;
  Cost cost = 0;
  std::vector<int> cuts_used;  // indexed by item id - 1
};

// Builds a result from a finished packing: recomputes the cost and counts
// fragments per item.
SolveResult make_result(Packing packing, const Instance& instance);

// Round-by-round record of the off-line algorithm.
struct CiffdTrace {
  std::vector<Cost> round_costs;  // first entry: initial FFD packing
  std::vector<bool> round_skipped;
  Cost best_before_squeeze = 0;
};

SolveResult solve_ciffd(const Instance& instance, CiffdTrace* trace = nullptr);

// Category of a cut remainder placed by CFFf's fill-factor rule.
enum class RemainderCategory {
  X,  // alone in a freshly opened largest bin
  Y,  // in a largest bin, shared
  Z,  // in a smaller bin
};

struct RemainderPlacement {
  ItemId item = 0;
  Size size = 0;
  std::size_t bin = 0;
  RemainderCategory category = RemainderCategory::Y;
};

SolveResult solve_cfff(const Instance& instance, FillFactor f = {},
                       std::vector<RemainderPlacement>* trace = nullptr);

SolveResult solve_cnfl(const Instance& instance);
SolveResult solve_cdnfl(const Instance& instance);

enum class Algorithm { Ciffd, Cfff, Cnfl, Cdnfl };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view text);

SolveResult solve(const Instance& instance, Algorithm algorithm, FillFactor f = {});

}  // namespace vscif
