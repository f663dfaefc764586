#include "pipp/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pipp/errors.hpp"
#include "pipp/intensity.hpp"
#include "pipp/model_json.hpp"
#include "pipp/quadrature.hpp"
#include "pipp/rng.hpp"
#include "pipp/sampler.hpp"

namespace pipp {

using nlohmann::json;

McSettings scaled(McSettings mc, double factor) {
  if (!(factor > 0.0 && factor <= 1.0))
    throw ConfigError("scale factor must lie in (0,1]");
  auto scale = [factor](std::uint64_t n) {
    return std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::llround(static_cast<double>(n) * factor)));
  };
  mc.n_steps = scale(mc.n_steps);
  mc.n_replicates = scale(mc.n_replicates);
  return mc;
}

std::vector<double> default_gamma1_grid(Family family) {
  std::vector<double> grid;
  const int first = family == Family::DiggleGratton ? 1 : 0;
  for (int i = first; i <= 20; ++i) grid.push_back(i / 20.0);
  return grid;
}

ExperimentSpec experiment_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ConfigError("experiment must be a JSON object");
    if (!j.contains("model")) throw ConfigError("experiment is missing \"model\"");
    if (!j.contains("beta")) throw ConfigError("experiment is missing \"beta\"");
    ExperimentSpec spec{.name = j.value("name", std::string("sweep")),
                        .model_template = model_from_json(j.at("model")),
                        .beta = j.at("beta").get<double>()};
    if (!(spec.beta > 0.0) || !std::isfinite(spec.beta))
      throw ConfigError("beta must be positive and finite");
    if (j.contains("gamma1_grid")) {
      spec.gamma1_grid = j.at("gamma1_grid").get<std::vector<double>>();
      if (spec.gamma1_grid.empty()) throw ConfigError("gamma1_grid is empty");
      for (std::size_t i = 0; i < spec.gamma1_grid.size(); ++i) {
        const double g = spec.gamma1_grid[i];
        if (!(g >= 0.0 && g <= 1.0))
          throw ConfigError("gamma1_grid values must lie in [0,1]");
        if (i > 0 && !(g > spec.gamma1_grid[i - 1]))
          throw ConfigError("gamma1_grid must be sorted ascending");
      }
    } else {
      spec.gamma1_grid = default_gamma1_grid(spec.model_template.family());
    }
    if (j.contains("mc") && !j.at("mc").is_null()) {
      const json& m = j.at("mc");
      McSettings mc;
      mc.n_steps = m.value("n_steps", mc.n_steps);
      mc.n_replicates = m.value("n_replicates", mc.n_replicates);
      mc.seed = m.value("seed", mc.seed);
      mc.threads = m.value("threads", 0u);
      if (m.contains("extension")) mc.extension = m.at("extension").get<double>();
      if (m.contains("target_window"))
        mc.target_window = box_from_json(m.at("target_window"));
      if (mc.n_steps < 1 || mc.n_replicates < 1)
        throw ConfigError("mc.n_steps and mc.n_replicates must be >= 1");
      spec.mc = mc;
    }
    spec.output_path = j.value("output", std::string());
    return spec;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed experiment: ") + e.what());
  }
}

json experiment_to_json(const ExperimentSpec& spec) {
  json j{{"name", spec.name},
         {"model", model_to_json(spec.model_template)},
         {"beta", spec.beta},
         {"gamma1_grid", spec.gamma1_grid}};
  if (spec.mc) {
    json m{{"n_steps", spec.mc->n_steps},
           {"n_replicates", spec.mc->n_replicates},
           {"seed", spec.mc->seed}};
    if (spec.mc->extension) m["extension"] = *spec.mc->extension;
    if (spec.mc->target_window)
      m["target_window"] = box_to_json(*spec.mc->target_window);
    j["mc"] = m;
  }
  if (!spec.output_path.empty()) j["output"] = spec.output_path;
  return j;
}

SweepTable run_sweep(const ExperimentSpec& spec) {
  SweepTable table;
  table.has_mc = spec.mc.has_value();
  for (std::size_t r = 0; r < spec.gamma1_grid.size(); ++r) {
    const double gamma1 = spec.gamma1_grid[r];
    const PairwiseInteraction model = spec.model_template.with_gamma1(gamma1);
    const InteractionSummary s = summarize(model);
    const ApproxResult a = approximate(spec.beta, s.G, s.kappa);
    SweepRow row{.gamma1 = gamma1,
                 .beta = spec.beta,
                 .G = s.G,
                 .kappa = s.kappa,
                 .lambda_ps = a.lambda_ps,
                 .lambda_dpp = a.lambda_dpp};
    if (spec.mc) {
      const SimConfig config{.model = model,
                             .beta = spec.beta,
                             .target_window = spec.mc->target_window,
                             .extension = spec.mc->extension,
                             .n_steps = spec.mc->n_steps,
                             .n_replicates = spec.mc->n_replicates,
                             .seed = derive_seed(spec.mc->seed, r),
                             .threads = spec.mc->threads};
      const MCEstimate est = estimate_intensity(config);
      row.mc_mean = est.mean_intensity;
      row.mc_se = est.std_error;
      row.mc_q1 = est.quartiles[0];
      row.mc_median = est.quartiles[1];
      row.mc_q3 = est.quartiles[2];
    }
    table.rows.push_back(row);
  }
  return table;
}

namespace {

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  out += buf;
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

std::string sweep_to_csv(const SweepTable& table) {
  std::string out(table.has_mc ? kSweepMcHeader : kSweepHeader);
  out += '\n';
  for (const SweepRow& r : table.rows) {
    std::vector<double> values{r.gamma1, r.beta, r.G, r.kappa, r.lambda_ps,
                               r.lambda_dpp};
    if (table.has_mc)
      values.insert(values.end(),
                    {r.mc_mean, r.mc_se, r.mc_q1, r.mc_median, r.mc_q3});
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out += ',';
      append_number(out, values[i]);
    }
    out += '\n';
  }
  return out;
}

SweepTable sweep_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  SweepTable table;
  if (line == kSweepMcHeader)
    table.has_mc = true;
  else if (line != kSweepHeader)
    throw SchemaError("unexpected CSV header '" + line + "'");
  const std::size_t width = table.has_mc ? 11 : 6;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != width)
      throw SchemaError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(width) + " fields");
    std::vector<double> v;
    for (const auto& f : fields) {
      std::size_t used = 0;
      double x = 0.0;
      try {
        x = std::stod(f, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != f.size())
        throw SchemaError("line " + std::to_string(line_no) +
                          ": not a number '" + f + "'");
      v.push_back(x);
    }
    SweepRow r{v[0], v[1], v[2], v[3], v[4], v[5]};
    if (table.has_mc) {
      r.mc_mean = v[6];
      r.mc_se = v[7];
      r.mc_q1 = v[8];
      r.mc_median = v[9];
      r.mc_q3 = v[10];
    }
    table.rows.push_back(r);
  }
  return table;
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pipp
