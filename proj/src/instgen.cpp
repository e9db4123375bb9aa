#include "vscif/instgen.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vscif/auxiliary.hpp"

namespace vscif {

std::string_view to_string(GenMode mode) {
  return mode == GenMode::KnownOptimum ? "optimum" : "free";
}

GenMode parse_gen_mode(std::string_view text) {
  if (text == "optimum") return GenMode::KnownOptimum;
  if (text == "free") return GenMode::Free;
  raise(ErrorKind::Parse, "unknown generator mode '" + std::string(text) + "'");
}

void GenConfig::validate() const {
  if (m < 1) raise(ErrorKind::Config, "m must be at least 1");
  if (b_max < 2) raise(ErrorKind::Config, "b_max must be at least 2");
  if (static_cast<Size>(m) - 1 > b_max - 1)
    raise(ErrorKind::Config, "cannot draw " + std::to_string(m - 1) +
                                 " distinct capacities below b_max=" + std::to_string(b_max));
  if (item_low < 1 || item_low > item_high || item_high >= b_max)
    raise(ErrorKind::Config, "item range must satisfy 1 <= low <= high < b_max");
  if (n_initial < 0) raise(ErrorKind::Config, "n_initial must be non-negative");
  if (cut_limit < 0) raise(ErrorKind::Config, "cut limit must be non-negative");
}

std::vector<BinClass> gen_classes(const GenConfig& config, Rng& rng) {
  config.validate();
  std::set<Size> drawn;
  while (drawn.size() < static_cast<std::size_t>(config.m - 1))
    drawn.insert(rng.uniform(1, config.b_max - 1));

  std::vector<Size> capacities{config.b_max};
  capacities.insert(capacities.end(), drawn.rbegin(), drawn.rend());

  std::vector<BinClass> classes;
  classes.push_back(BinClass{config.b_max, config.b_max});
  for (std::size_t i = 1; i < capacities.size(); ++i) {
    const Size b = capacities[i];
    if (config.cost_model == CostModel::Linear) {
      classes.push_back(BinClass{b, b});
      continue;
    }
    const auto& prev = classes.back();
    Cost c = 0;
    // Redraw until unit cost does not fall below the larger class's.
    do {
      c = rng.uniform(b, prev.cost - 1);
    } while (static_cast<Wide>(c) * prev.capacity < static_cast<Wide>(prev.cost) * b);
    classes.push_back(BinClass{b, c});
  }
  return classes;
}

namespace {

std::vector<Size> draw_initial(const GenConfig& config, Rng& rng) {
  std::vector<Size> sizes(static_cast<std::size_t>(config.n_initial));
  for (auto& s : sizes) s = rng.uniform(config.item_low, config.item_high);
  return sizes;
}

std::vector<Size> glue(const std::vector<Size>& pieces, int cut_limit) {
  const auto group = static_cast<std::size_t>(cut_limit) + 1;
  std::vector<Size> items;
  for (std::size_t i = 0; i < pieces.size(); i += group) {
    Size sum = 0;
    for (std::size_t j = i; j < std::min(i + group, pieces.size()); ++j) sum = checked_add(sum, pieces[j]);
    items.push_back(sum);
  }
  return items;
}

}  // namespace

Instance gen_known_optimum(const GenConfig& config, Rng& rng) {
  if (config.mode != GenMode::KnownOptimum)
    raise(ErrorKind::Config, "gen_known_optimum needs mode=optimum");
  auto classes = gen_classes(config, rng);
  auto pieces = draw_initial(config, rng);

  const auto bins = pack_ff(UniformPackingRequest{pieces, config.b_max});
  for (const auto& bin : bins.bins) {
    const Size load = bin.load();
    if (load < config.b_max) pieces.push_back(config.b_max - load);
  }
  rng.shuffle(std::span<Size>(pieces));

  const Cost c_max = classes.front().cost;
  std::optional<Cost> optimum;
  if (!bins.bins.empty()) optimum = checked_mul(static_cast<Size>(bins.bins.size()), c_max);
  return Instance(glue(pieces, config.cut_limit), std::move(classes), config.cut_limit,
                  config.cost_model, optimum);
}

Instance gen_free(const GenConfig& config, Rng& rng) {
  if (config.mode != GenMode::Free) raise(ErrorKind::Config, "gen_free needs mode=free");
  auto classes = gen_classes(config, rng);
  const auto pieces = draw_initial(config, rng);
  return Instance(glue(pieces, config.cut_limit), std::move(classes), config.cut_limit,
                  config.cost_model);
}

Instance generate(const GenConfig& config) {
  Rng rng(config.seed);
  return config.mode == GenMode::KnownOptimum ? gen_known_optimum(config, rng)
                                              : gen_free(config, rng);
}

std::string generator_header(const GenConfig& config) {
  std::ostringstream out;
  out << "// " << kGeneratorName << " " << kGeneratorVersion << " rng=" << Rng::kAlgorithm
      << " seed=" << config.seed << " m=" << config.m << " bmax=" << config.b_max
      << " n=" << config.n_initial << " items=[" << config.item_low << "," << config.item_high
      << "] d=" << config.cut_limit << " cost=" << to_string(config.cost_model)
      << " mode=" << to_string(config.mode) << "\n";
  return out.str();
}

}  // namespace vscif
