#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vscif/core.hpp"
#include "vscif/rng.hpp"

namespace vscif {

inline constexpr const char* kGeneratorName = "vscif-instgen";
inline constexpr int kGeneratorVersion = 1;

enum class GenMode { KnownOptimum, Free };

std::string_view to_string(GenMode mode);
GenMode parse_gen_mode(std::string_view text);

struct GenConfig {
  std::uint64_t seed = 1;
  int m = 3;
  Size b_max = 100;
  int n_initial = 200;
  Size item_low = 1;
  Size item_high = 99;
  int cut_limit = 1;
  CostModel cost_model = CostModel::Linear;
  GenMode mode = GenMode::KnownOptimum;

  // Throws Config unless 1 <= item_low <= item_high < b_max, m >= 1,
  // m - 1 <= b_max - 1, n_initial >= 0 and cut_limit >= 0.
  void validate() const;
};

// Largest class is always (b_max, b_max). Other capacities are distinct draws
// from [1, b_max-1]. Monotone costs: c[i+1] drawn from [b[i+1], c[i]-1], redrawn
// until its unit cost is no lower than c[i]/b[i].
std::vector<BinClass> gen_classes(const GenConfig& config, Rng& rng);

// Instance built around a packing of completely full largest bins: initial
// items First-Fit into b_max bins, one filler per non-full bin, all pieces
// shuffled and glued in groups of cut_limit+1.
Instance gen_known_optimum(const GenConfig& config, Rng& rng);

// Initial items glued in groups of cut_limit+1, no fillers, no optimum.
Instance gen_free(const GenConfig& config, Rng& rng);

// Seeds an Rng from config.seed and dispatches on config.mode. Classes are
// drawn before items.
Instance generate(const GenConfig& config);

// One-line `//` comment naming generator, version, RNG, seed and config.
std::string generator_header(const GenConfig& config);

}  // namespace vscif
