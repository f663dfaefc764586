#include "pipp/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <optional>

#include "pipp/errors.hpp"
#include "pipp/intensity.hpp"
#include "pipp/model_json.hpp"
#include "pipp/quadrature.hpp"
#include "pipp/sampler.hpp"
#include "pipp/suite.hpp"
#include "pipp/svg.hpp"
#include "pipp/sweep.hpp"

namespace pipp {

namespace {

struct Options {
  std::string config;
  std::string out;
  std::optional<double> beta;
  std::optional<std::uint64_t> seed;
  std::optional<double> scale;
  bool no_mc = false;
  std::vector<std::string> inputs;
};

int cmd_approx(const Options& o, std::ostream& out) {
  const nlohmann::json j = read_json_file(o.config);
  const bool wrapped = j.is_object() && j.contains("model");
  const PairwiseInteraction model = model_from_json(wrapped ? j.at("model") : j);
  std::optional<double> beta = o.beta;
  if (!beta && wrapped && j.contains("beta")) {
    if (!j.at("beta").is_number()) throw ConfigError("beta must be a number");
    beta = j.at("beta").get<double>();
  }
  if (!beta) throw ConfigError("no beta given (use --beta or a \"beta\" key)");
  if (!(*beta > 0.0) || !std::isfinite(*beta))
    throw ConfigError("beta must be positive and finite");

  const InteractionSummary s = summarize(model);
  const ApproxResult a = approximate(*beta, s.G, s.kappa);
  const nlohmann::json result{{"model", model_to_json(model)},
                              {"beta", *beta},
                              {"G", s.G},
                              {"int_sq", s.int_sq},
                              {"kappa", s.kappa},
                              {"lambda_ps", a.lambda_ps},
                              {"lambda_dpp", a.lambda_dpp},
                              {"residual_ps", a.residual_ps},
                              {"residual_dpp", a.residual_dpp},
                              {"iterations_ps", a.iterations_ps},
                              {"iterations_dpp", a.iterations_dpp}};
  out << result.dump() << '\n';
  if (!o.out.empty()) write_file_atomic(o.out, result.dump(2) + "\n");
  return 0;
}

ExperimentSpec load_experiment(const Options& o) {
  ExperimentSpec spec = experiment_from_json(read_json_file(o.config));
  if (o.no_mc) spec.mc.reset();
  if (spec.mc) {
    if (o.seed) spec.mc->seed = *o.seed;
    if (o.scale) spec.mc = scaled(*spec.mc, *o.scale);
  }
  if (!o.out.empty()) spec.output_path = o.out;
  return spec;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const ExperimentSpec spec = load_experiment(o);
  const std::string csv = sweep_to_csv(run_sweep(spec));
  if (spec.output_path.empty())
    out << csv;
  else
    write_file_atomic(spec.output_path, csv);
  return 0;
}

int cmd_figure(const Options& o) {
  std::vector<FigurePanel> panels;
  for (const auto& path : o.inputs) {
    std::string text;
    try {
      text = read_text_file(path);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
    panels.push_back(
        {std::filesystem::path(path).stem().string(), sweep_from_csv(text)});
  }
  write_file_atomic(o.out, render_figure(panels));
  return 0;
}

int cmd_paper_suite(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteOptions opts;
  if (o.scale) opts.scale = *o.scale;
  if (o.seed) opts.seed = *o.seed;
  opts.with_mc = !o.no_mc;
  const auto outcomes = run_paper_suite(o.out, opts);
  int failed = 0;
  for (const auto& r : outcomes) {
    if (r.ok) {
      out << r.name << " ok " << r.seconds << "s\n";
    } else {
      ++failed;
      err << r.name << " FAILED: " << r.error << '\n';
    }
  }
  return failed ? 1 : 0;
}

int cmd_simulate(const Options& o, std::ostream& err) {
  const ExperimentSpec spec = load_experiment(o);
  const McSettings mc = spec.mc.value_or(McSettings{});
  const SimConfig config{.model = spec.model_template,
                         .beta = spec.beta,
                         .target_window = mc.target_window,
                         .extension = mc.extension,
                         .n_steps = mc.n_steps,
                         .n_replicates = mc.n_replicates,
                         .seed = mc.seed,
                         .threads = mc.threads};
  for (const auto& w : config.validate()) err << "warning: " << w << '\n';
  write_pattern_dump(config, o.out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Intensity approximations for repulsive pairwise Gibbs point processes"};
  app.require_subcommand(1);
  Options o;

  auto* approx = app.add_subcommand("approx", "Print G, kappa, lambda_PS and lambda_DPP as JSON");
  approx->add_option("--config", o.config, "Model JSON, or {\"model\":..,\"beta\":..}")->required();
  approx->add_option("--beta", o.beta, "Activity parameter");
  approx->add_option("--out", o.out, "Also write the JSON to this file");

  auto* sweep = app.add_subcommand("sweep", "Sweep gamma1 and write the CSV table");
  sweep->add_option("--config", o.config, "Experiment JSON")->required();
  sweep->add_option("--out", o.out, "Output CSV (default: config \"output\" or stdout)");
  sweep->add_option("--seed", o.seed, "Override the Monte-Carlo seed");
  sweep->add_option("--scale", o.scale, "Scale replicates and steps by f in (0,1]");
  sweep->add_flag("--no-mc", o.no_mc, "Skip the Monte-Carlo columns");

  auto* figure = app.add_subcommand("figure", "Render sweep CSVs as an SVG figure");
  figure->add_option("csv", o.inputs, "Sweep CSV files, one panel each")->required();
  figure->add_option("--out", o.out, "Output SVG")->required();

  auto* suite = app.add_subcommand("paper-suite", "Run all fourteen reference experiments");
  suite->add_option("--out", o.out, "Output directory")->required();
  suite->add_option("--scale", o.scale, "Scale replicates and steps by f in (0,1]");
  suite->add_option("--seed", o.seed, "Master seed");
  suite->add_flag("--no-mc", o.no_mc, "Approximation curves only");

  auto* simulate = app.add_subcommand("simulate", "Dump sampled patterns as CSV");
  simulate->add_option("--config", o.config, "Experiment JSON (model, beta, mc)")->required();
  simulate->add_option("--out", o.out, "Output directory")->required();
  simulate->add_option("--seed", o.seed, "Override the seed");
  simulate->add_option("--scale", o.scale, "Scale replicates and steps by f in (0,1]");

  std::vector<std::string> argv_store{"pipp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*approx) return cmd_approx(o, out);
    if (*sweep) return cmd_sweep(o, out);
    if (*figure) return cmd_figure(o);
    if (*suite) return cmd_paper_suite(o, out, err);
    if (*simulate) return cmd_simulate(o, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
    return 2;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace pipp
