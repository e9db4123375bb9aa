#include "vscif/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include <boost/math/distributions/normal.hpp>

#include "json.hpp"

namespace vscif {

AlgorithmSpec AlgorithmSpec::parse(std::string_view text) {
  AlgorithmSpec spec;
  const auto colon = text.find(':');
  spec.algorithm = parse_algorithm(text.substr(0, colon));
  if (colon != std::string_view::npos) {
    if (spec.algorithm != Algorithm::Cfff)
      raise(ErrorKind::Parse, "only cfff takes a fill factor: '" + std::string(text) + "'");
    spec.fill_factor = FillFactor::parse(text.substr(colon + 1));
  }
  return spec;
}

std::string AlgorithmSpec::label() const {
  switch (algorithm) {
    case Algorithm::Ciffd: return "CIFFD";
    case Algorithm::Cfff: return "CFFf(" + fill_factor.to_string() + ")";
    case Algorithm::Cnfl: return "CNFL";
    case Algorithm::Cdnfl: return "CDNFL";
  }
  return "?";
}

void SeriesSpec::validate() const {
  gen.validate();
  if (algorithms.empty()) raise(ErrorKind::Config, "a series needs at least one algorithm");
  if (repetitions < 2) raise(ErrorKind::Config, "repetitions must be at least 2");
  if (!(alpha > 0.0 && alpha < 1.0)) raise(ErrorKind::Config, "alpha must lie in (0, 1)");
  if (threads < 1) raise(ErrorKind::Config, "threads must be at least 1");
}

std::string_view to_string(Metric metric) {
  return metric == Metric::RatioToOptimum ? "ratio" : "mean-cost";
}

Metric parse_metric(std::string_view text) {
  if (text == "ratio") return Metric::RatioToOptimum;
  if (text == "mean-cost") return Metric::MeanCost;
  raise(ErrorKind::Parse, "unknown metric '" + std::string(text) + "'");
}

std::string_view to_string(SweepAxis axis) { return axis == SweepAxis::BinClasses ? "m" : "d"; }

SweepAxis parse_sweep_axis(std::string_view text) {
  if (text == "m") return SweepAxis::BinClasses;
  if (text == "d") return SweepAxis::CutLimit;
  raise(ErrorKind::Parse, "unknown sweep axis '" + std::string(text) + "'");
}

namespace {

SeriesSample run_one(const SeriesSpec& spec, std::size_t index) {
  SeriesSample sample;
  sample.index = index;
  sample.seed = spec.seed_policy == SeedPolicy::Fixed ? spec.gen.seed
                                                      : derive_seed(spec.gen.seed, index);
  try {
    GenConfig config = spec.gen;
    config.seed = sample.seed;
    const Instance instance = generate(config);
    sample.mass = item_mass(instance);
    sample.known_optimum = instance.known_optimum();
    for (const auto& algo : spec.algorithms) {
      auto result = solve(instance, algo.algorithm, algo.fill_factor);
      const auto verdict = verify_packing(result.packing, instance);
      if (!verdict.valid()) {
        raise(ErrorKind::Structural, algo.label() + " produced an invalid packing (" +
                                         std::string(to_string(verdict.violation->kind)) + ": " +
                                         verdict.violation->detail + ")");
      }
      if (sample.known_optimum && result.cost < *sample.known_optimum) {
        raise(ErrorKind::Structural, algo.label() + " cost " + std::to_string(result.cost) +
                                         " is below the known optimum " +
                                         std::to_string(*sample.known_optimum));
      }
      sample.costs.push_back(result.cost);
    }
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(e.what()) + " [instance " + std::to_string(index) +
                              ", seed " + std::to_string(sample.seed) + "]");
  }
  return sample;
}

}  // namespace

std::vector<SeriesSample> collect_samples(const SeriesSpec& spec) {
  spec.validate();
  const auto count = static_cast<std::size_t>(spec.repetitions);
  std::vector<SeriesSample> samples(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        samples[i] = run_one(spec, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::min<unsigned>(spec.threads, static_cast<unsigned>(count));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  // Lowest failing index wins so the reported seed does not depend on scheduling.
  for (const auto& error : errors)
    if (error) std::rethrow_exception(error);
  return samples;
}

double normal_critical_value(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) raise(ErrorKind::Config, "alpha must lie in (0, 1)");
  const boost::math::normal_distribution<double> standard;
  return boost::math::quantile(standard, 1.0 - alpha / 2.0);
}

MeanCi mean_with_ci(std::span<const double> values, double alpha) {
  if (values.size() < 2) raise(ErrorKind::Precondition, "need at least two samples");
  double sum = 0.0;
  for (const auto v : values) sum += v;
  const double n = static_cast<double>(values.size());
  const double mean = sum / n;
  double squares = 0.0;
  for (const auto v : values) squares += (v - mean) * (v - mean);
  const double stddev = std::sqrt(squares / (n - 1.0));
  return MeanCi{mean, normal_critical_value(alpha) * stddev / std::sqrt(n)};
}

BenchReport run_series(const SeriesSpec& spec, std::string axis_label) {
  const auto samples = collect_samples(spec);
  const Metric metric =
      spec.gen.mode == GenMode::KnownOptimum ? Metric::RatioToOptimum : Metric::MeanCost;
  if (axis_label.empty()) axis_label = "base";

  BenchReport report;
  for (std::size_t a = 0; a < spec.algorithms.size(); ++a) {
    std::vector<double> values;
    values.reserve(samples.size());
    for (const auto& s : samples) {
      const double cost = static_cast<double>(s.costs[a]);
      if (metric == Metric::MeanCost) {
        values.push_back(cost);
      } else {
        // Empty instances (no optimum) cannot occur with n_initial >= 1.
        if (!s.known_optimum) raise(ErrorKind::Config, "ratio metric needs known optimum instances");
        values.push_back(cost / static_cast<double>(*s.known_optimum));
      }
    }
    const auto stats = mean_with_ci(values, spec.alpha);
    report.rows.push_back(SeriesRow{axis_label, spec.algorithms[a].label(), metric, stats.mean,
                                    stats.half_width, spec.repetitions, spec.gen.seed});
  }
  return report;
}

std::vector<BenchReport> sweep(SweepAxis axis, std::span<const int> values,
                               const SeriesSpec& base) {
  if (values.empty()) raise(ErrorKind::Config, "sweep needs at least one axis value");
  std::vector<BenchReport> reports;
  for (const int v : values) {
    SeriesSpec spec = base;
    if (axis == SweepAxis::BinClasses)
      spec.gen.m = v;
    else
      spec.gen.cut_limit = v;
    reports.push_back(run_series(spec, std::string(to_string(axis)) + "=" + std::to_string(v)));
  }
  return reports;
}

namespace {

std::string fixed6(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", v);
  return buffer;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

constexpr const char* kCsvHeader = "axis,algorithm,metric,mean,ci_half_width,repetitions,seed";

}  // namespace

void emit_csv(std::span<const BenchReport> reports, std::ostream& out) {
  bool any = false;
  for (const auto& r : reports) any = any || !r.rows.empty();
  if (!any) raise(ErrorKind::Precondition, "refusing to write an empty report");
  out << kCsvHeader << "\n";
  for (const auto& report : reports) {
    for (const auto& row : report.rows) {
      out << row.axis << ',' << row.algorithm << ',' << to_string(row.metric) << ','
          << fixed6(row.mean) << ',' << fixed6(row.ci_half_width) << ',' << row.repetitions << ','
          << row.seed << "\n";
    }
  }
}

void emit_csv(std::span<const BenchReport> reports, const std::string& path) {
  std::ostringstream buffer;
  emit_csv(reports, buffer);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << buffer.str();
  if (!out) raise(ErrorKind::Io, "error writing '" + path + "'");
}

std::vector<SeriesRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) raise(ErrorKind::Parse, "missing CSV header");
  std::vector<SeriesRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 7) raise(ErrorKind::Parse, "expected 7 CSV fields in '" + line + "'");
    try {
      rows.push_back(SeriesRow{f[0], f[1], parse_metric(f[2]), std::stod(f[3]), std::stod(f[4]),
                               std::stoi(f[5]), std::stoull(f[6])});
    } catch (const std::logic_error&) {
      raise(ErrorKind::Parse, "malformed CSV row '" + line + "'");
    }
  }
  return rows;
}

BenchPlan parse_bench_plan(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text.begin(), json_text.end(), nullptr, true, true);
  } catch (const nlohmann::json::parse_error& e) {
    raise(ErrorKind::Parse, e.what());
  }
  if (!doc.is_object()) raise(ErrorKind::Parse, "bench spec must be a JSON object");

  BenchPlan plan;
  auto& spec = plan.base;
  try {
    auto& gen = spec.gen;
    gen.seed = doc.value("seed", gen.seed);
    gen.m = doc.value("m", gen.m);
    gen.b_max = doc.value("bmax", gen.b_max);
    gen.n_initial = doc.value("n", gen.n_initial);
    gen.item_low = doc.value("item_low", gen.item_low);
    gen.item_high = doc.value("item_high", gen.b_max - 1);
    gen.cut_limit = doc.value("d", gen.cut_limit);
    gen.cost_model = parse_cost_model(doc.value("cost", std::string("linear")));
    gen.mode = parse_gen_mode(doc.value("mode", std::string("optimum")));
    spec.repetitions = doc.value("repetitions", spec.repetitions);
    spec.alpha = doc.value("alpha", spec.alpha);
    spec.threads = doc.value("threads", spec.threads);
    plan.title = doc.value("title", std::string());

    if (!doc.contains("algorithms") || !doc["algorithms"].is_array())
      raise(ErrorKind::Parse, "bench spec needs an 'algorithms' array");
    for (const auto& a : doc["algorithms"]) spec.algorithms.push_back(AlgorithmSpec::parse(a.get<std::string>()));

    if (doc.contains("sweep")) {
      const auto& s = doc["sweep"];
      plan.axis = parse_sweep_axis(s.at("axis").get<std::string>());
      plan.values = s.at("values").get<std::vector<int>>();
    }
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::Parse, e.what());
  }
  spec.validate();
  if (plan.axis && plan.values.empty()) raise(ErrorKind::Config, "sweep needs at least one value");
  return plan;
}

std::vector<BenchReport> run_plan(const BenchPlan& plan) {
  if (plan.axis) return sweep(*plan.axis, plan.values, plan.base);
  return {run_series(plan.base)};
}

}  // namespace vscif
