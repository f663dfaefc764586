#include "pipp/suite.hpp"

#include <chrono>
#include <filesystem>

#include "pipp/errors.hpp"
#include "pipp/rng.hpp"
#include "pipp/svg.hpp"

namespace pipp {

const std::vector<SuiteEntry>& paper_suite() {
  using PI = PairwiseInteraction;
  // gamma[0] is a placeholder; sweeps overwrite it.
  static const std::vector<SuiteEntry> entries{
      {"S-R005-b100", PI::strauss(0.0, 0.05), 100, 10000},
      {"S-R01-b100", PI::strauss(0.0, 0.1), 100, 10000},
      {"S-R01-b50", PI::strauss(0.0, 0.1), 50, 10000},
      {"S-R015-b50", PI::strauss(0.0, 0.15), 50, 10000},
      {"S-R005-b200", PI::strauss(0.0, 0.05), 200, 1000},
      {"SHC-d0025-R005-b200", PI::strauss_hard_core(0.0, 0.025, 0.05), 200, 1000},
      {"DG-R0025-b200", PI::diggle_gratton(1.0, 0.025), 200, 10000},
      {"DG-R005-b200", PI::diggle_gratton(1.0, 0.05), 200, 10000},
      {"DG-R0075-b200", PI::diggle_gratton(1.0, 0.075), 200, 1000},
      {"DG-R015-b50", PI::diggle_gratton(1.0, 0.15), 50, 10000},
      {"PS-g2-05-b200", PI::piecewise({0.0, 0.5}, {0.05, 0.1}), 200, 1000},
      {"PSHC-g2-05-b200", PI::piecewise({0.0, 0.5}, {0.05, 0.1}, 0.025), 200, 1000},
      {"PS-g2-0-b200", PI::piecewise({0.0, 0.0}, {0.05, 0.1}), 200, 1000},
      {"PSHC-g2-0-b200", PI::piecewise({0.0, 0.0}, {0.05, 0.1}, 0.025), 200, 1000},
  };
  return entries;
}

ExperimentSpec suite_experiment(std::size_t index, const SuiteOptions& opts) {
  const SuiteEntry& e = paper_suite().at(index);
  ExperimentSpec spec{.name = e.name,
                      .model_template = e.model_template,
                      .beta = e.beta,
                      .gamma1_grid = default_gamma1_grid(e.model_template.family())};
  if (opts.with_mc) {
    McSettings mc;
    mc.n_steps = kFullScaleSteps;
    mc.n_replicates = e.n_replicates;
    mc.seed = derive_seed(opts.seed, index);
    mc.threads = opts.threads;
    spec.mc = scaled(mc, opts.scale);
  }
  return spec;
}

std::vector<SuiteOutcome> run_paper_suite(const std::string& out_dir,
                                          const SuiteOptions& opts) {
  namespace fs = std::filesystem;
  if (!(opts.scale > 0.0 && opts.scale <= 1.0))
    throw ConfigError("scale factor must lie in (0,1]");
  fs::create_directories(out_dir);

  nlohmann::json manifest{{"seed", opts.seed},
                          {"scale", opts.scale},
                          {"with_mc", opts.with_mc},
                          {"configurations", nlohmann::json::array()}};
  std::vector<SuiteOutcome> outcomes;
  for (std::size_t i = 0; i < paper_suite().size(); ++i) {
    SuiteOutcome outcome{.name = paper_suite()[i].name};
    const ExperimentSpec spec = suite_experiment(i, opts);
    const auto start = std::chrono::steady_clock::now();
    try {
      const SweepTable table = run_sweep(spec);
      const std::string base = (fs::path(out_dir) / spec.name).string();
      write_file_atomic(base + ".csv", sweep_to_csv(table));
      write_file_atomic(base + ".svg", render_figure({{spec.name, table}}));
      outcome.ok = true;
    } catch (const std::exception& e) {
      outcome.error = e.what();
    }
    outcome.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    nlohmann::json entry{{"name", spec.name},
                         {"experiment", experiment_to_json(spec)},
                         {"ok", outcome.ok},
                         {"runtime_seconds", outcome.seconds}};
    if (!outcome.ok) entry["error"] = outcome.error;
    manifest["configurations"].push_back(entry);
    outcomes.push_back(std::move(outcome));
  }
  write_file_atomic((fs::path(out_dir) / "manifest.json").string(),
                    manifest.dump(2) + "\n");
  return outcomes;
}

}  // namespace pipp
