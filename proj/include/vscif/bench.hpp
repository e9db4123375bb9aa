#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vscif/instgen.hpp"
#include "vscif/solvers.hpp"

namespace vscif {

struct AlgorithmSpec {
  Algorithm algorithm = Algorithm::Cfff;
  FillFactor fill_factor;

  // "ciffd", "cnfl", "cdnfl", "cfff" or "cfff:<f>".
  static AlgorithmSpec parse(std::string_view text);
  std::string label() const;  // CIFFD, CFFf(0.5), CNFL, CDNFL
};

enum class SeedPolicy {
  PerInstance,  // instance i uses derive_seed(seed, i)
  Fixed,        // every instance uses the master seed
};

struct SeriesSpec {
  GenConfig gen;
  std::vector<AlgorithmSpec> algorithms;
  int repetitions = 1000;
  double alpha = 0.05;
  unsigned threads = 1;
  SeedPolicy seed_policy = SeedPolicy::PerInstance;

  void validate() const;
};

enum class Metric { RatioToOptimum, MeanCost };

std::string_view to_string(Metric metric);
Metric parse_metric(std::string_view text);

struct SeriesRow {
  std::string axis;
  std::string algorithm;
  Metric metric = Metric::RatioToOptimum;
  double mean = 0.0;
  double ci_half_width = 0.0;
  int repetitions = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const SeriesRow&, const SeriesRow&) = default;
};

struct BenchReport {
  std::vector<SeriesRow> rows;
};

// Raw per-instance outcome, costs in algorithm order.
struct SeriesSample {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  Size mass = 0;
  std::optional<Cost> known_optimum;
  std::vector<Cost> costs;
};

std::vector<SeriesSample> collect_samples(const SeriesSpec& spec);

// Two-sided normal quantile z_{1 - alpha/2}.
double normal_critical_value(double alpha);

struct MeanCi {
  double mean = 0.0;
  double half_width = 0.0;
};

MeanCi mean_with_ci(std::span<const double> values, double alpha);

// Known-optimum series report the ratio cost/optimum, free series the mean
// cost. Any solver failure aborts with the offending seed in the message.
BenchReport run_series(const SeriesSpec& spec, std::string axis_label = "");

enum class SweepAxis { BinClasses, CutLimit };

std::string_view to_string(SweepAxis axis);
SweepAxis parse_sweep_axis(std::string_view text);

std::vector<BenchReport> sweep(SweepAxis axis, std::span<const int> values,
                               const SeriesSpec& base);

// Columns: axis,algorithm,metric,mean,ci_half_width,repetitions,seed.
// Means and half-widths are written with 6 fractional digits.
void emit_csv(std::span<const BenchReport> reports, std::ostream& out);
void emit_csv(std::span<const BenchReport> reports, const std::string& path);
std::vector<SeriesRow> parse_csv(std::istream& in);

// Standalone SVG: one marker series per algorithm with mean +/- CI bars.
void emit_chart(std::span<const BenchReport> reports, std::ostream& out,
                std::string_view title = "");
void emit_chart(std::span<const BenchReport> reports, const std::string& path,
                std::string_view title = "");

// Bench spec file consumed by the CLI:
//   {"seed":1,"m":3,"bmax":100,"n":200,"item_low":1,"item_high":99,"d":1,
//    "cost":"linear","mode":"optimum","algorithms":["ciffd","cfff:0.5"],
//    "repetitions":1000,"alpha":0.05,"threads":1,
//    "sweep":{"axis":"m"|"d","values":[3,10]}}
// Every key except "algorithms" is optional.
struct BenchPlan {
  SeriesSpec base;
  std::optional<SweepAxis> axis;
  std::vector<int> values;
  std::string title;
};

BenchPlan parse_bench_plan(std::string_view json_text);
std::vector<BenchReport> run_plan(const BenchPlan& plan);

}  // namespace vscif
