#include <CLI11.hpp>
#include <iostream>

#include "infotherm/acceptance.hpp"
#include "runner.hpp"

namespace {

using namespace infotherm::cli;

int run_or_sweep(const std::string& config_path, bool allow_grid, std::uint64_t* seed,
                 unsigned* threads, const std::string& out, const std::string& format) {
  ExperimentConfig cfg = load_config_file(config_path);
  if (!allow_grid && !cfg.grid.empty())
    throw std::invalid_argument("run: config contains a grid; use the sweep subcommand");
  if (seed) cfg.seed = *seed;
  if (threads) cfg.threads = *threads;
  if (!out.empty()) cfg.output_path = out;
  if (format == "csv") cfg.format = OutputFormat::csv;
  if (format == "json") cfg.format = OutputFormat::json;

  const RunManifest manifest = execute(cfg);
  std::cerr << manifest.to_json().dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"infotherm: entropy bookkeeping, Szilard engines, Landauer bounds and demons"};
  app.require_subcommand(1);

  std::string config_path, out_path, format;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool seed_set = false, threads_set = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "experiment config (JSON)")->required();
    sub->add_option("--seed", seed, "override the master seed")->each([&](const std::string&) {
      seed_set = true;
    });
    sub->add_option("--threads", threads, "worker threads (INFOTHERM_THREADS overrides)")
        ->each([&](const std::string&) { threads_set = true; });
    sub->add_option("--out", out_path, "output path (atomic write; default stdout)");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* run_cmd = app.add_subcommand("run", "execute one experiment");
  add_common(run_cmd);
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "execute a parameter grid");
  add_common(sweep_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  std::uint64_t vseed = 0xA11CE;
  unsigned vthreads = 0;
  std::string inject, only;
  verify_cmd->add_option("--seed", vseed, "acceptance master seed");
  verify_cmd->add_option("--threads", vthreads, "worker threads");
  verify_cmd->add_option("--inject-fault", inject,
                         "test hook: corrupt the named criterion's tolerance");
  verify_cmd->add_option("--only", only, "run a single named criterion");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed() || sweep_cmd->parsed()) {
      return run_or_sweep(config_path, sweep_cmd->parsed(), seed_set ? &seed : nullptr,
                          threads_set ? &threads : nullptr, out_path, format);
    }
    infotherm::acceptance::Options opts;
    opts.seed = vseed;
    opts.threads = vthreads;
    opts.inject_fault = inject;
    opts.only = only;
    const auto results = infotherm::acceptance::run_all(opts, std::cout);
    return infotherm::acceptance::all_passed(results) ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "config"}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "runtime"}}.dump() << "\n";
    return 2;
  }
}
