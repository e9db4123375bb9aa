#include "vscif/vscif.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "vscif/bench.hpp"
#include "vscif/exact.hpp"
#include "vscif/instgen.hpp"
#include "vscif/json_io.hpp"
#include "vscif/solvers.hpp"

struct vscif_instance {
  vscif::Instance value;
};

struct vscif_packing {
  vscif::Packing value;
};

struct vscif_report {
  std::vector<vscif::BenchReport> reports;
  std::string title;
};

namespace {

thread_local std::string last_error;

vscif_status status_of(vscif::ErrorKind kind) {
  using vscif::ErrorKind;
  switch (kind) {
    case ErrorKind::Structural: return VSCIF_E_STRUCTURAL;
    case ErrorKind::Infeasible: return VSCIF_E_INFEASIBLE;
    case ErrorKind::Precondition: return VSCIF_E_PRECONDITION;
    case ErrorKind::Config: return VSCIF_E_CONFIG;
    case ErrorKind::Parse: return VSCIF_E_PARSE;
    case ErrorKind::Io: return VSCIF_E_IO;
    case ErrorKind::BudgetExceeded: return VSCIF_E_BUDGET_EXCEEDED;
    case ErrorKind::LimitsExceeded: return VSCIF_E_LIMITS_EXCEEDED;
  }
  return VSCIF_E_INTERNAL;
}

vscif_status fail(vscif_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
vscif_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const vscif::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(VSCIF_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(VSCIF_E_INTERNAL, e.what());
  } catch (...) {
    return fail(VSCIF_E_INTERNAL, "unknown error");
  }
}

vscif_status null_argument(const char* name) {
  return fail(VSCIF_E_INVALID_ARGUMENT, std::string("null argument: ") + name);
}

char* duplicate(const std::string& text) {
  auto* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.data(), text.size() + 1);
  return out;
}

vscif::GenConfig to_config(const vscif_gen_config& c) {
  vscif::GenConfig config;
  config.seed = c.seed;
  config.m = c.m;
  config.b_max = c.b_max;
  config.n_initial = c.n_initial;
  config.item_low = c.item_low;
  config.item_high = c.item_high;
  config.cut_limit = c.cut_limit;
  if (c.cost_model != VSCIF_COST_LINEAR && c.cost_model != VSCIF_COST_MONOTONE)
    vscif::raise(vscif::ErrorKind::Config, "unknown cost model");
  if (c.mode != VSCIF_MODE_KNOWN_OPTIMUM && c.mode != VSCIF_MODE_FREE)
    vscif::raise(vscif::ErrorKind::Config, "unknown generator mode");
  config.cost_model = c.cost_model == VSCIF_COST_LINEAR ? vscif::CostModel::Linear
                                                        : vscif::CostModel::Monotone;
  config.mode = c.mode == VSCIF_MODE_KNOWN_OPTIMUM ? vscif::GenMode::KnownOptimum
                                                   : vscif::GenMode::Free;
  return config;
}

vscif_violation to_violation(vscif::ViolationKind kind) {
  using vscif::ViolationKind;
  switch (kind) {
    case ViolationKind::InvalidClass: return VSCIF_VIOLATION_INVALID_CLASS;
    case ViolationKind::CapacityOverflow: return VSCIF_VIOLATION_CAPACITY_OVERFLOW;
    case ViolationKind::MassMismatch: return VSCIF_VIOLATION_MASS_MISMATCH;
    case ViolationKind::CutLimitExceeded: return VSCIF_VIOLATION_CUT_LIMIT_EXCEEDED;
    case ViolationKind::UnknownItem: return VSCIF_VIOLATION_UNKNOWN_ITEM;
    case ViolationKind::EmptyBin: return VSCIF_VIOLATION_EMPTY_BIN;
  }
  return VSCIF_VIOLATION_NONE;
}

}  // namespace

extern "C" {

const char* vscif_last_error(void) { return last_error.c_str(); }

const char* vscif_status_name(vscif_status status) {
  switch (status) {
    case VSCIF_OK: return "ok";
    case VSCIF_E_INVALID_ARGUMENT: return "invalid-argument";
    case VSCIF_E_PARSE: return "parse";
    case VSCIF_E_STRUCTURAL: return "structural";
    case VSCIF_E_INFEASIBLE: return "infeasible";
    case VSCIF_E_PRECONDITION: return "precondition";
    case VSCIF_E_CONFIG: return "config";
    case VSCIF_E_IO: return "io";
    case VSCIF_E_BUDGET_EXCEEDED: return "budget-exceeded";
    case VSCIF_E_LIMITS_EXCEEDED: return "limits-exceeded";
    case VSCIF_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* vscif_violation_name(vscif_violation violation) {
  switch (violation) {
    case VSCIF_VIOLATION_NONE: return "none";
    case VSCIF_VIOLATION_INVALID_CLASS: return "invalid-class";
    case VSCIF_VIOLATION_CAPACITY_OVERFLOW: return "capacity-overflow";
    case VSCIF_VIOLATION_MASS_MISMATCH: return "mass-mismatch";
    case VSCIF_VIOLATION_CUT_LIMIT_EXCEEDED: return "cut-limit-exceeded";
    case VSCIF_VIOLATION_UNKNOWN_ITEM: return "unknown-item";
    case VSCIF_VIOLATION_EMPTY_BIN: return "empty-bin";
  }
  return "unknown";
}

void vscif_string_free(char* text) { std::free(text); }

const char* vscif_version(void) { return "1.0.0"; }

void vscif_gen_config_default(vscif_gen_config* config) {
  if (!config) return;
  const vscif::GenConfig defaults;
  config->seed = defaults.seed;
  config->m = defaults.m;
  config->b_max = defaults.b_max;
  config->n_initial = defaults.n_initial;
  config->item_low = defaults.item_low;
  config->item_high = defaults.item_high;
  config->cut_limit = defaults.cut_limit;
  config->cost_model = VSCIF_COST_LINEAR;
  config->mode = VSCIF_MODE_KNOWN_OPTIMUM;
}

void vscif_exact_limits_default(vscif_exact_limits* limits) {
  if (!limits) return;
  const vscif::ExactLimits defaults;
  limits->max_items = defaults.max_items;
  limits->max_size = defaults.max_size;
  limits->max_classes = defaults.max_classes;
  limits->max_cuts = defaults.max_cuts;
  limits->node_budget = defaults.node_budget;
}

vscif_status vscif_instance_from_json(const char* json, vscif_instance** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new vscif_instance{vscif::instance_from_json(json)};
    return VSCIF_OK;
  });
}

vscif_status vscif_instance_load(const char* path, vscif_instance** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new vscif_instance{vscif::instance_from_json(vscif::read_text_file(path))};
    return VSCIF_OK;
  });
}

vscif_status vscif_instance_to_json(const vscif_instance* instance, char** out) {
  if (!instance) return null_argument("instance");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = duplicate(vscif::instance_to_json(instance->value));
    return VSCIF_OK;
  });
}

vscif_status vscif_instance_item_mass(const vscif_instance* instance, int64_t* out) {
  if (!instance) return null_argument("instance");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = vscif::item_mass(instance->value);
    return VSCIF_OK;
  });
}

vscif_status vscif_instance_item_count(const vscif_instance* instance, size_t* out) {
  if (!instance) return null_argument("instance");
  if (!out) return null_argument("out");
  *out = instance->value.item_count();
  return VSCIF_OK;
}

vscif_status vscif_instance_max_capacity(const vscif_instance* instance, int64_t* out) {
  if (!instance) return null_argument("instance");
  if (!out) return null_argument("out");
  *out = instance->value.max_capacity();
  return VSCIF_OK;
}

vscif_status vscif_instance_known_optimum(const vscif_instance* instance, int* has_value,
                                          int64_t* out) {
  if (!instance) return null_argument("instance");
  if (!has_value) return null_argument("has_value");
  if (!out) return null_argument("out");
  const auto known = instance->value.known_optimum();
  *has_value = known ? 1 : 0;
  *out = known.value_or(0);
  return VSCIF_OK;
}

void vscif_instance_free(vscif_instance* instance) { delete instance; }

vscif_status vscif_generate(const vscif_gen_config* config, vscif_instance** out) {
  if (!config) return null_argument("config");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new vscif_instance{vscif::generate(to_config(*config))};
    return VSCIF_OK;
  });
}

vscif_status vscif_generate_file_text(const vscif_gen_config* config, char** out) {
  if (!config) return null_argument("config");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto cfg = to_config(*config);
    const auto instance = vscif::generate(cfg);
    *out = duplicate(vscif::generator_header(cfg) + vscif::instance_to_json(instance));
    return VSCIF_OK;
  });
}

vscif_status vscif_packing_from_json(const char* json, vscif_packing** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new vscif_packing{vscif::packing_from_json(json)};
    return VSCIF_OK;
  });
}

vscif_status vscif_packing_load(const char* path, vscif_packing** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new vscif_packing{vscif::packing_from_json(vscif::read_text_file(path))};
    return VSCIF_OK;
  });
}

vscif_status vscif_packing_to_json(const vscif_packing* packing, char** out) {
  if (!packing) return null_argument("packing");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = duplicate(vscif::packing_to_json(packing->value));
    return VSCIF_OK;
  });
}

vscif_status vscif_packing_bin_count(const vscif_packing* packing, size_t* out) {
  if (!packing) return null_argument("packing");
  if (!out) return null_argument("out");
  *out = packing->value.bins.size();
  return VSCIF_OK;
}

void vscif_packing_free(vscif_packing* packing) { delete packing; }

vscif_status vscif_solve(const vscif_instance* instance, vscif_algorithm algorithm,
                         const char* fill_factor, vscif_packing** packing, int64_t* cost) {
  if (!instance) return null_argument("instance");
  if (!packing) return null_argument("packing");
  if (algorithm < VSCIF_ALGO_CIFFD || algorithm > VSCIF_ALGO_CDNFL)
    return fail(VSCIF_E_INVALID_ARGUMENT, "unknown algorithm");
  return guarded([&] {
    const auto f = fill_factor ? vscif::FillFactor::parse(fill_factor) : vscif::FillFactor{};
    auto result = vscif::solve(instance->value, static_cast<vscif::Algorithm>(algorithm), f);
    if (cost) *cost = result.cost;
    *packing = new vscif_packing{std::move(result.packing)};
    return VSCIF_OK;
  });
}

vscif_status vscif_total_cost(const vscif_packing* packing, const vscif_instance* instance,
                              int64_t* out) {
  if (!packing) return null_argument("packing");
  if (!instance) return null_argument("instance");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = vscif::total_cost(packing->value, instance->value);
    return VSCIF_OK;
  });
}

vscif_status vscif_verify(const vscif_instance* instance, const vscif_packing* packing,
                          vscif_verdict* out) {
  if (!instance) return null_argument("instance");
  if (!packing) return null_argument("packing");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto verdict = vscif::verify_packing(packing->value, instance->value);
    out->valid = verdict.valid() ? 1 : 0;
    out->cost = verdict.cost;
    out->violation = verdict.valid() ? VSCIF_VIOLATION_NONE : to_violation(verdict.violation->kind);
    const std::string message = verdict.valid() ? "" : verdict.violation->detail;
    std::snprintf(out->message, sizeof out->message, "%s", message.c_str());
    return VSCIF_OK;
  });
}

vscif_status vscif_exact(const vscif_instance* instance, const vscif_exact_limits* limits,
                         vscif_objective objective, int64_t* value, vscif_packing** packing) {
  if (!instance) return null_argument("instance");
  if (!value) return null_argument("value");
  if (objective != VSCIF_OBJECTIVE_COST && objective != VSCIF_OBJECTIVE_BINS)
    return fail(VSCIF_E_INVALID_ARGUMENT, "unknown objective");
  return guarded([&] {
    vscif::ExactLimits l;
    if (limits) {
      l.max_items = limits->max_items;
      l.max_size = limits->max_size;
      l.max_classes = limits->max_classes;
      l.max_cuts = limits->max_cuts;
      l.node_budget = limits->node_budget;
    }
    auto outcome = objective == VSCIF_OBJECTIVE_COST ? vscif::solve_exact(instance->value, l)
                                                     : vscif::min_bins_exact(instance->value, l);
    if (outcome.status == vscif::ExactStatus::LimitsExceeded)
      return fail(VSCIF_E_LIMITS_EXCEEDED, "instance exceeds the exact search limits");
    if (outcome.status == vscif::ExactStatus::BudgetExceeded)
      return fail(VSCIF_E_BUDGET_EXCEEDED,
                  "node budget of " + std::to_string(l.node_budget) + " exhausted");
    *value = outcome.value;
    if (packing) *packing = new vscif_packing{std::move(outcome.solution->packing)};
    return VSCIF_OK;
  });
}

vscif_status vscif_bench_run(const char* spec_json, vscif_report** out) {
  if (!spec_json) return null_argument("spec_json");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto plan = vscif::parse_bench_plan(spec_json);
    *out = new vscif_report{vscif::run_plan(plan), plan.title};
    return VSCIF_OK;
  });
}

vscif_status vscif_report_row_count(const vscif_report* report, size_t* out) {
  if (!report) return null_argument("report");
  if (!out) return null_argument("out");
  std::size_t rows = 0;
  for (const auto& r : report->reports) rows += r.rows.size();
  *out = rows;
  return VSCIF_OK;
}

vscif_status vscif_report_write_csv(const vscif_report* report, const char* path) {
  if (!report) return null_argument("report");
  if (!path) return null_argument("path");
  return guarded([&] {
    vscif::emit_csv(report->reports, std::string(path));
    return VSCIF_OK;
  });
}

vscif_status vscif_report_csv_text(const vscif_report* report, char** out) {
  if (!report) return null_argument("report");
  if (!out) return null_argument("out");
  return guarded([&] {
    std::ostringstream text;
    vscif::emit_csv(report->reports, text);
    *out = duplicate(text.str());
    return VSCIF_OK;
  });
}

vscif_status vscif_report_write_chart(const vscif_report* report, const char* path) {
  if (!report) return null_argument("report");
  if (!path) return null_argument("path");
  return guarded([&] {
    vscif::emit_chart(report->reports, std::string(path), report->title);
    return VSCIF_OK;
  });
}

void vscif_report_free(vscif_report* report) { delete report; }

}  // extern "C"
