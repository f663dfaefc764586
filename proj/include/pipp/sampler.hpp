#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pipp/geometry.hpp"
#include "pipp/interaction.hpp"

namespace pipp {

struct SimConfig {
  PairwiseInteraction model;
  double beta = 100.0;
  std::optional<Box> target_window;  // unit cube of model.dim() when unset
  std::optional<double> extension;   // 2R when unset
  std::uint64_t n_steps = 1'000'000;
  std::uint64_t n_replicates = 1;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency

  Box target() const;
  double margin() const;
  /// Target window grown by the margin on every side; the simulation domain.
  Box simulation_window() const;

  /// Throws ConfigError on invalid settings; returns non-fatal warnings.
  std::vector<std::string> validate() const;
};

nlohmann::json sim_config_to_json(const SimConfig& config);

struct MCEstimate {
  double mean_intensity = 0.0;
  double std_error = 0.0;
  std::vector<std::uint64_t> replicate_counts;
  std::array<double, 3> quartiles{};  // q1, median, q3 of per-replicate intensity
};

/// Birth-death Metropolis-Hastings run of n_steps from the empty pattern on
/// the simulation window. Deterministic in (config, replicate_seed).
PointPattern mh_sample(const SimConfig& config, std::uint64_t replicate_seed);

/// Seed used for replicate `index` of `config`.
std::uint64_t replicate_seed(const SimConfig& config, std::uint64_t index);

/// All replicate patterns on the simulation window, ordered by index.
std::vector<PointPattern> sample_replicates(const SimConfig& config);

/// Runs the replicates, clips each to the target window and summarises the
/// per-replicate intensities.
MCEstimate estimate_intensity(const SimConfig& config);

/// Σ_{u∈x} 1/λ(u, x\u) − |window|. Zero mean under the model on the full
/// simulation window. Throws ZeroConditionalIntensity if some term is 1/0.
double gnz_residual(const PointPattern& pattern,
                    const PairwiseInteraction& model, double beta);

/// Writes replicate_NNNN.csv (header x,y) for every replicate plus
/// manifest.json with the configuration and seeds.
void write_pattern_dump(const SimConfig& config, const std::string& dir);

/// Type-7 (linear interpolation) sample quantile; `sorted` must be sorted.
double quantile_sorted(const std::vector<double>& sorted, double p);

}  // namespace pipp
