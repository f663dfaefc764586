#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pipp/sweep.hpp"

namespace pipp {

/// One of the fourteen reference experiments.
struct SuiteEntry {
  std::string name;
  PairwiseInteraction model_template;
  double beta;
  std::uint64_t n_replicates;  // full-scale m
};

inline constexpr std::uint64_t kFullScaleSteps = 1'000'000;

const std::vector<SuiteEntry>& paper_suite();

struct SuiteOptions {
  double scale = 1.0;
  std::uint64_t seed = 20190101;
  bool with_mc = true;
  unsigned threads = 0;
};

struct SuiteOutcome {
  std::string name;
  bool ok = false;
  std::string error;
  double seconds = 0.0;
};

/// Experiment spec of entry `index` under `opts` (grid, scaled MC block, seed).
ExperimentSpec suite_experiment(std::size_t index, const SuiteOptions& opts);

/// Writes <name>.csv and <name>.svg per entry plus manifest.json into
/// `out_dir`. A failing entry is recorded and the remaining ones still run.
std::vector<SuiteOutcome> run_paper_suite(const std::string& out_dir,
                                          const SuiteOptions& opts);

}  // namespace pipp
