// vscif command line front end. Talks to the library through the C API only.
//
// Exit codes:
//   0  success
//   1  verify: packing is invalid
//   2  usage error (unknown flag, bad value)
//   3  exact: node budget exhausted
//   4  exact: instance beyond the exact search limits
//   5  any other library error (category printed on stderr)

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "vscif/vscif.h"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitLimits = 4;
constexpr int kExitError = 5;

struct Failure {
  int code;
};

void check(vscif_status status) {
  if (status == VSCIF_OK) return;
  std::cerr << "error [" << vscif_status_name(status) << "]: " << vscif_last_error() << "\n";
  switch (status) {
    case VSCIF_E_BUDGET_EXCEEDED: throw Failure{kExitBudget};
    case VSCIF_E_LIMITS_EXCEEDED: throw Failure{kExitLimits};
    default: throw Failure{kExitError};
  }
}

// Owns a string returned by the library.
struct OwnedText {
  char* text = nullptr;
  ~OwnedText() { vscif_string_free(text); }
};

void write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) {
    std::cerr << "error [io]: cannot write '" << path << "'\n";
    throw Failure{kExitError};
  }
}

struct InstanceHandle {
  vscif_instance* p = nullptr;
  ~InstanceHandle() { vscif_instance_free(p); }
};
struct PackingHandle {
  vscif_packing* p = nullptr;
  ~PackingHandle() { vscif_packing_free(p); }
};
struct ReportHandle {
  vscif_report* p = nullptr;
  ~ReportHandle() { vscif_report_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variable-sized bin packing with cost and item fragmentation"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(vscif_version()));

  // generate
  vscif_gen_config gen;
  vscif_gen_config_default(&gen);
  std::string gen_cost = "linear", gen_mode = "optimum", gen_out;
  auto* generate = app.add_subcommand("generate", "draw a random instance");
  generate->add_option("--seed", gen.seed, "master seed");
  generate->add_option("--m", gen.m, "number of bin classes");
  generate->add_option("--bmax", gen.b_max, "largest bin capacity");
  generate->add_option("--n", gen.n_initial, "items before gluing");
  generate->add_option("--d", gen.cut_limit, "cuts allowed per item");
  generate->add_option("--item-low", gen.item_low, "smallest drawn item size");
  generate->add_option("--item-high", gen.item_high, "largest drawn item size");
  generate->add_option("--cost", gen_cost, "cost model")->check(CLI::IsMember({"linear", "monotone"}));
  generate->add_option("--mode", gen_mode, "instance family")->check(CLI::IsMember({"optimum", "free"}));
  generate->add_option("--out", gen_out, "output file (stdout if omitted)");

  // solve
  std::string solve_in, solve_algo, solve_f = "0.5", solve_out;
  auto* solve = app.add_subcommand("solve", "run a heuristic on an instance");
  solve->add_option("--in", solve_in, "instance JSON")->required();
  solve->add_option("--algo", solve_algo, "algorithm")
      ->required()
      ->check(CLI::IsMember({"ciffd", "cfff", "cnfl", "cdnfl"}));
  solve->add_option("--f", solve_f, "CFFf fill factor in [0.5, 1]");
  solve->add_option("--out", solve_out, "packing JSON output");

  // verify
  std::string verify_instance, verify_packing;
  auto* verify = app.add_subcommand("verify", "check a packing against an instance");
  verify->add_option("--instance", verify_instance, "instance JSON")->required();
  verify->add_option("--packing", verify_packing, "packing JSON")->required();

  // exact
  vscif_exact_limits limits;
  vscif_exact_limits_default(&limits);
  std::string exact_in, exact_objective = "cost", exact_out;
  auto* exact = app.add_subcommand("exact", "exhaustive optimum for tiny instances");
  exact->add_option("--in", exact_in, "instance JSON")->required();
  exact->add_option("--max-items", limits.max_items, "refuse more items than this");
  exact->add_option("--max-size", limits.max_size, "refuse larger items");
  exact->add_option("--max-classes", limits.max_classes, "refuse more bin classes");
  exact->add_option("--max-cuts", limits.max_cuts, "refuse a larger cut limit");
  exact->add_option("--budget", limits.node_budget, "search node budget");
  exact->add_option("--objective", exact_objective, "what to minimise")
      ->check(CLI::IsMember({"cost", "bins"}));
  exact->add_option("--out", exact_out, "optimal packing JSON output");

  // bench
  std::string bench_spec, bench_csv, bench_chart;
  auto* bench = app.add_subcommand("bench", "run a benchmark series or sweep");
  bench->add_option("--spec", bench_spec, "bench JSON file")->required()->check(CLI::ExistingFile);
  bench->add_option("--csv", bench_csv, "CSV report output")->required();
  bench->add_option("--chart", bench_chart, "SVG chart output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*generate) {
      gen.cost_model = gen_cost == "linear" ? VSCIF_COST_LINEAR : VSCIF_COST_MONOTONE;
      gen.mode = gen_mode == "optimum" ? VSCIF_MODE_KNOWN_OPTIMUM : VSCIF_MODE_FREE;
      OwnedText text;
      check(vscif_generate_file_text(&gen, &text.text));
      if (gen_out.empty())
        std::cout << text.text;
      else
        write_file(gen_out, text.text);
    } else if (*solve) {
      InstanceHandle inst;
      check(vscif_instance_load(solve_in.c_str(), &inst.p));
      const vscif_algorithm algo = solve_algo == "ciffd"  ? VSCIF_ALGO_CIFFD
                                   : solve_algo == "cfff" ? VSCIF_ALGO_CFFF
                                   : solve_algo == "cnfl" ? VSCIF_ALGO_CNFL
                                                          : VSCIF_ALGO_CDNFL;
      PackingHandle packing;
      int64_t cost = 0;
      check(vscif_solve(inst.p, algo, solve_f.c_str(), &packing.p, &cost));
      vscif_verdict verdict;
      check(vscif_verify(inst.p, packing.p, &verdict));
      if (!verdict.valid) {
        std::cerr << "error [internal]: solver output failed verification ("
                  << vscif_violation_name(verdict.violation) << ": " << verdict.message << ")\n";
        return kExitError;
      }
      if (!solve_out.empty()) {
        OwnedText text;
        check(vscif_packing_to_json(packing.p, &text.text));
        write_file(solve_out, text.text);
      }
      std::cout << "cost " << cost << "\n";
    } else if (*verify) {
      InstanceHandle inst;
      PackingHandle packing;
      check(vscif_instance_load(verify_instance.c_str(), &inst.p));
      check(vscif_packing_load(verify_packing.c_str(), &packing.p));
      vscif_verdict verdict;
      check(vscif_verify(inst.p, packing.p, &verdict));
      if (!verdict.valid) {
        std::cout << "invalid " << vscif_violation_name(verdict.violation) << ": " << verdict.message
                  << "\n";
        return kExitInvalid;
      }
      std::cout << "valid " << verdict.cost << "\n";
    } else if (*exact) {
      InstanceHandle inst;
      check(vscif_instance_load(exact_in.c_str(), &inst.p));
      PackingHandle packing;
      int64_t value = 0;
      const auto objective = exact_objective == "cost" ? VSCIF_OBJECTIVE_COST : VSCIF_OBJECTIVE_BINS;
      const auto status = vscif_exact(inst.p, &limits, objective, &value, &packing.p);
      if (status == VSCIF_E_BUDGET_EXCEEDED) {
        std::cout << "budget-exceeded\n";
        return kExitBudget;
      }
      if (status == VSCIF_E_LIMITS_EXCEEDED) {
        std::cout << "limits-exceeded\n";
        std::cerr << vscif_last_error() << "\n";
        return kExitLimits;
      }
      check(status);
      if (!exact_out.empty()) {
        OwnedText text;
        check(vscif_packing_to_json(packing.p, &text.text));
        write_file(exact_out, text.text);
      }
      std::cout << value << "\n";
    } else if (*bench) {
      std::ifstream in(bench_spec, std::ios::binary);
      const std::string spec((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      ReportHandle report;
      check(vscif_bench_run(spec.c_str(), &report.p));
      check(vscif_report_write_csv(report.p, bench_csv.c_str()));
      if (!bench_chart.empty()) check(vscif_report_write_chart(report.p, bench_chart.c_str()));
      size_t rows = 0;
      check(vscif_report_row_count(report.p, &rows));
      std::cout << "wrote " << rows << " rows to " << bench_csv << "\n";
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return 0;
}
