#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>

#include "pnc/bounds.hpp"
#include "pnc/errors.hpp"
#include "pnc/interval.hpp"
#include "pnc/pipeline.hpp"
#include "pnc/practical.hpp"
#include "pnc/report.hpp"
#include "pnc/selftest.hpp"
#include "pnc/table_io.hpp"

namespace {

template <typename Fn>
auto timed(const char* phase, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  auto log = [&] {
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::fprintf(stderr, "[pnc] %-12s %8.3f s\n", phase, dt.count());
  };
  if constexpr (std::is_void_v<std::invoke_result_t<Fn>>) {
    fn();
    log();
  } else {
    auto result = fn();
    log();
    return result;
  }
}

struct BoundsOptions {
  std::uint64_t n_max = 0;
  int order = 13;
  int extension_k0 = 24;
  std::uint64_t mem_budget = std::uint64_t{2} << 30;
  std::string format = "text";
  std::string checkpoint;
  int threads = 1;
  std::string verify = "none";
  std::string out;
};

struct TableOptions {
  std::uint64_t n_max = 0;
  int order = 13;
  std::uint64_t mem_budget = std::uint64_t{2} << 30;
  int threads = 1;
  std::string out;
  bool binary = false;
  bool augmented = false;
};

// Prints one line per check; returns the count of failures.
int report_checks(const std::vector<pnc::CheckResult>& checks) {
  int failures = 0;
  for (const pnc::CheckResult& c : checks) {
    if (c.passed) {
      std::printf("PASS %s: %s\n", c.name.c_str(), c.detail.c_str());
    } else {
      std::printf("FAIL %s: %s\n", c.name.c_str(), c.detail.c_str());
      ++failures;
    }
  }
  std::fflush(stdout);
  return failures;
}

int run_bounds(const BoundsOptions& o) {
  pnc::kernel_selftest();
  if (o.verify != "none") {
    auto checks = o.verify == "fast" ? pnc::run_fast_selftest()
                                     : pnc::run_acceptance_suite();
    if (report_checks(checks) > 0) return 1;
  }

  pnc::PipelineConfig cfg;
  cfg.n_max = o.n_max;
  cfg.weight_order = o.order;
  cfg.threads = o.threads;
  cfg.mem_budget_bytes = o.mem_budget;

  std::vector<pnc::AugmentedRow> augmented;
  bool loaded = false;
  std::filesystem::path checkpoint_file;
  if (!o.checkpoint.empty()) {
    std::filesystem::create_directories(o.checkpoint);
    checkpoint_file = std::filesystem::path(o.checkpoint) /
                      ("augmented_N" + std::to_string(o.n_max) + "_J" +
                       std::to_string(o.order) + ".bin");
    if (std::filesystem::exists(checkpoint_file)) {
      augmented = timed("load", [&] {
        return pnc::read_augmented_rows(checkpoint_file.string(), true);
      });
      loaded = true;
    }
  }
  if (!loaded) {
    std::vector<pnc::PracticalRow> rows = timed("enumerate", [&] {
      pnc::EnumerateConfig ecfg;
      ecfg.n_max = cfg.n_max;
      ecfg.threads = cfg.threads;
      ecfg.mem_budget_bytes = cfg.mem_budget_bytes;
      return pnc::enumerate_practical(ecfg);
    });
    std::fprintf(stderr, "[pnc] rows: %zu\n", rows.size());
    augmented = timed("augment", [&] {
      return pnc::augment_rows(rows, cfg.weight_order);
    });
    if (!checkpoint_file.empty()) {
      timed("checkpoint", [&] {
        pnc::write_augmented_rows(augmented, checkpoint_file.string(), true);
      });
    }
  }

  pnc::Aggregates agg = timed("fold", [&] {
    return pnc::fold_rows(augmented, cfg.n_max, cfg.weight_order);
  });
  pnc::WeightSum weights = timed("weights", [&] {
    return pnc::weight_sum_over_primes(2 * cfg.n_max, cfg.weight_order);
  });
  pnc::ResidualBound residual = timed("residual", [&] {
    return pnc::residual_bound_at(2 * cfg.n_max, o.extension_k0);
  });
  pnc::BoundsReport report = pnc::assemble(agg, weights, residual);

  std::string doc =
      pnc::report_serialize(report, pnc::parse_report_format(o.format));
  if (o.out.empty()) {
    std::fwrite(doc.data(), 1, doc.size(), stdout);
    std::fflush(stdout);
  } else {
    std::ofstream f(o.out, std::ios::trunc);
    if (!f || !(f << doc) || !f.flush()) {
      throw pnc::IoError("cannot write report to " + o.out);
    }
  }
  return 0;
}

int run_table(const TableOptions& o) {
  pnc::kernel_selftest();
  pnc::EnumerateConfig ecfg;
  ecfg.n_max = o.n_max;
  ecfg.threads = o.threads;
  ecfg.mem_budget_bytes = o.mem_budget;
  std::vector<pnc::PracticalRow> rows =
      timed("enumerate", [&] { return pnc::enumerate_practical(ecfg); });
  std::fprintf(stderr, "[pnc] rows: %zu\n", rows.size());
  if (o.augmented) {
    std::vector<pnc::AugmentedRow> augmented =
        timed("augment", [&] { return pnc::augment_rows(rows, o.order); });
    timed("write", [&] {
      pnc::write_augmented_rows(augmented, o.out, o.binary);
    });
  } else {
    timed("write", [&] { pnc::write_rows(rows, o.out, o.binary); });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified bounds for the density constant of practical numbers"};
  app.require_subcommand(1);

  BoundsOptions bo;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "Run the full pipeline and print a certified bounds report");
  bounds->add_option("--n-max", bo.n_max, "Enumeration limit N (required)")
      ->required()
      ->check(CLI::PositiveNumber)
      ->envname("PNC_N_MAX");
  bounds->add_option("--j", bo.order, "Weight truncation order")
      ->check(CLI::Range(2, 28))
      ->envname("PNC_J");
  bounds->add_option("--k0", bo.extension_k0, "Residual table anchor exponent")
      ->check(CLI::Range(24, 38))
      ->envname("PNC_K0");
  bounds->add_option("--mem-budget", bo.mem_budget, "Memory budget in bytes")
      ->check(CLI::PositiveNumber)
      ->envname("PNC_MEM_BUDGET");
  bounds->add_option("--format", bo.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->envname("PNC_FORMAT");
  bounds->add_option("--checkpoint", bo.checkpoint,
                     "Directory for reusable augmented-table checkpoints")
      ->envname("PNC_CHECKPOINT");
  bounds->add_option("--threads", bo.threads, "Worker threads for enumeration")
      ->check(CLI::Range(1, 256))
      ->envname("PNC_THREADS");
  bounds->add_option("--verify", bo.verify, "Self-test level before the run")
      ->check(CLI::IsMember({"none", "fast", "full"}))
      ->envname("PNC_VERIFY");
  bounds->add_option("--out", bo.out, "Write the report here instead of stdout")
      ->envname("PNC_OUT");

  std::string selftest_level = "fast";
  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the confidence or acceptance checks");
  selftest->add_option("level", selftest_level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));

  TableOptions to;
  CLI::App* table = app.add_subcommand(
      "table", "Enumerate practical rows and dump them to a file");
  table->add_option("--n-max", to.n_max, "Enumeration limit N (required)")
      ->required()
      ->check(CLI::PositiveNumber)
      ->envname("PNC_N_MAX");
  table->add_option("--out", to.out, "Output path (required)")->required();
  table->add_flag("--binary", to.binary, "Raw little-endian dump instead of CSV");
  table->add_flag("--augmented", to.augmented,
                  "Include the three snapshot intervals per row");
  table->add_option("--j", to.order, "Weight truncation order (augmented dumps)")
      ->check(CLI::Range(2, 28))
      ->envname("PNC_J");
  table->add_option("--threads", to.threads, "Worker threads for enumeration")
      ->check(CLI::Range(1, 256))
      ->envname("PNC_THREADS");
  table->add_option("--mem-budget", to.mem_budget, "Memory budget in bytes")
      ->check(CLI::PositiveNumber)
      ->envname("PNC_MEM_BUDGET");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bounds->parsed()) return run_bounds(bo);
    if (table->parsed()) return run_table(to);
    if (selftest->parsed()) {
      auto checks = selftest_level == "fast" ? pnc::run_fast_selftest()
                                             : pnc::run_acceptance_suite();
      return report_checks(checks) > 0 ? 1 : 0;
    }
  } catch (const pnc::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const pnc::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 4;
  } catch (const pnc::ConsistencyError& e) {
    std::fprintf(stderr, "consistency failure: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected failure: %s\n", e.what());
    return 3;
  }
  return 2;
}
