#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pipp/geometry.hpp"
#include "pipp/interaction.hpp"

namespace pipp {

/// Monte-Carlo block of an experiment.
struct McSettings {
  std::uint64_t n_steps = 1'000'000;
  std::uint64_t n_replicates = 1000;
  std::uint64_t seed = 1;
  std::optional<double> extension;
  std::optional<Box> target_window;
  unsigned threads = 0;
};

/// Multiplies replicates and steps by `factor` in (0,1], keeping each >= 1.
McSettings scaled(McSettings mc, double factor);

struct ExperimentSpec {
  std::string name;
  PairwiseInteraction model_template;  // gamma[0] is replaced by each grid value
  double beta = 100.0;
  std::vector<double> gamma1_grid;
  std::optional<McSettings> mc;
  std::string output_path;
};

/// 0, 0.05, ..., 1; without 0 for Diggle-Gratton.
std::vector<double> default_gamma1_grid(Family family);

ExperimentSpec experiment_from_json(const nlohmann::json& j);
nlohmann::json experiment_to_json(const ExperimentSpec& spec);

struct SweepRow {
  double gamma1 = 0.0;
  double beta = 0.0;
  double G = 0.0;
  double kappa = 0.0;
  double lambda_ps = 0.0;
  double lambda_dpp = 0.0;
  double mc_mean = 0.0;
  double mc_se = 0.0;
  double mc_q1 = 0.0;
  double mc_median = 0.0;
  double mc_q3 = 0.0;
};

struct SweepTable {
  bool has_mc = false;
  std::vector<SweepRow> rows;
};

inline constexpr std::string_view kSweepHeader =
    "gamma1,beta,G,kappa,lambda_ps,lambda_dpp";
inline constexpr std::string_view kSweepMcHeader =
    "gamma1,beta,G,kappa,lambda_ps,lambda_dpp,mc_mean,mc_se,mc_q1,mc_median,"
    "mc_q3";

/// Approximations (and Monte-Carlo estimates when spec.mc is set) on every
/// grid point. Row r of the MC columns uses seed derive_seed(mc.seed, r).
SweepTable run_sweep(const ExperimentSpec& spec);

/// CSV text with numbers at 10 significant digits.
std::string sweep_to_csv(const SweepTable& table);

/// Parses CSV text in the sweep schema; throws SchemaError otherwise.
SweepTable sweep_from_csv(std::string_view text);

/// Writes to `path` via a temporary sibling file and rename.
void write_file_atomic(const std::string& path, std::string_view content);

std::string read_text_file(const std::string& path);

}  // namespace pipp
