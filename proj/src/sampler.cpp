#include "pipp/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "pipp/errors.hpp"
#include "pipp/model_json.hpp"
#include "pipp/rng.hpp"

namespace pipp {

namespace {

// Point set with a uniform cell grid of side >= R, so every neighbour within
// range of a point lies in the 3^d block of cells around it.
class GridState {
 public:
  GridState(const Box& window, double range)
      : window_(window), dim_(window.dim()), range_(range) {
    cells_per_axis_.resize(dim_);
    cell_side_.resize(dim_);
    std::size_t total = 1;
    for (int k = 0; k < dim_; ++k) {
      const double side = window.side(k);
      const auto n = static_cast<std::size_t>(
          std::clamp(std::floor(side / range), 1.0, 1024.0));
      cells_per_axis_[k] = n;
      cell_side_[k] = side / static_cast<double>(n);
      total *= n;
    }
    cells_.resize(total);
    scratch_.resize(dim_);
    offsets_.push_back(std::vector<int>(dim_, -1));
    for (;;) {
      std::vector<int> next = offsets_.back();
      int k = 0;
      while (k < dim_ && next[k] == 1) next[k++] = -1;
      if (k == dim_) break;
      ++next[k];
      offsets_.push_back(next);
    }
  }

  std::size_t size() const { return cell_of_.size(); }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }
  const std::vector<double>& coords() const { return coords_; }

  void add(std::span<const double> p) {
    const std::size_t cell = cell_index(p);
    coords_.insert(coords_.end(), p.begin(), p.end());
    cell_of_.push_back(cell);
    slot_.push_back(cells_[cell].size());
    cells_[cell].push_back(size() - 1);
  }

  void remove(std::size_t i) {
    detach(i);
    const std::size_t last = size() - 1;
    if (i != last) {
      std::copy_n(coords_.begin() + static_cast<std::ptrdiff_t>(last * dim_),
                  dim_, coords_.begin() + static_cast<std::ptrdiff_t>(i * dim_));
      cell_of_[i] = cell_of_[last];
      slot_[i] = slot_[last];
      cells_[cell_of_[i]][slot_[i]] = i;
    }
    coords_.resize(last * dim_);
    cell_of_.pop_back();
    slot_.pop_back();
  }

  /// β ∏ g(‖u − v‖) over stored v, skipping index `skip`.
  double conditional_intensity(const PairwiseInteraction& model, double beta,
                               std::span<const double> u,
                               std::size_t skip) const {
    auto& centre = scratch_;
    for (int k = 0; k < dim_; ++k) centre[k] = axis_cell(u[k], k);
    double value = beta;
    for (const auto& off : offsets_) {
      std::size_t cell = 0;
      bool inside = true;
      for (int k = dim_ - 1; k >= 0; --k) {
        const auto c = static_cast<std::ptrdiff_t>(centre[k]) + off[k];
        if (c < 0 || c >= static_cast<std::ptrdiff_t>(cells_per_axis_[k])) {
          inside = false;
          break;
        }
        cell = cell * cells_per_axis_[k] + static_cast<std::size_t>(c);
      }
      if (!inside) continue;
      for (std::size_t j : cells_[cell]) {
        if (j == skip) continue;
        const double r = distance(u, point(j));
        if (r > range_) continue;
        value *= eval_g(model, r);
        if (value == 0.0) return 0.0;
      }
    }
    return value;
  }

 private:
  std::size_t axis_cell(double x, int k) const {
    const double rel = (x - window_.lower()[k]) / cell_side_[k];
    const auto c = static_cast<std::size_t>(std::max(0.0, rel));
    return std::min(c, cells_per_axis_[k] - 1);
  }

  std::size_t cell_index(std::span<const double> p) const {
    std::size_t cell = 0;
    for (int k = dim_ - 1; k >= 0; --k)
      cell = cell * cells_per_axis_[k] + axis_cell(p[k], k);
    return cell;
  }

  void detach(std::size_t i) {
    auto& members = cells_[cell_of_[i]];
    const std::size_t s = slot_[i];
    const std::size_t moved = members.back();
    members[s] = moved;
    slot_[moved] = s;
    members.pop_back();
  }

  const Box& window_;
  int dim_;
  double range_;
  std::vector<std::size_t> cells_per_axis_;
  std::vector<double> cell_side_;
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<std::vector<int>> offsets_;
  std::vector<double> coords_;
  std::vector<std::size_t> cell_of_;
  std::vector<std::size_t> slot_;
  mutable std::vector<std::size_t> scratch_;
};

// Runs job(i) for i in [0, n) on a small thread pool. Results are written by
// index, so the outcome does not depend on scheduling.
template <typename Job>
void parallel_for(std::uint64_t n, unsigned threads, Job&& job) {
  unsigned workers = threads ? threads : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(n, 1)));
  if (workers == 1) {
    for (std::uint64_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t i = next++; i < n; i = next++) {
        if (failed) return;
        try {
          job(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
      (void)w;
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

Box SimConfig::target() const {
  return target_window ? *target_window : Box::unit(model.dim());
}

double SimConfig::margin() const {
  return extension ? *extension : 2.0 * model.range();
}

Box SimConfig::simulation_window() const { return target().expanded(margin()); }

std::vector<std::string> SimConfig::validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw ConfigError("beta must be positive and finite");
  if (target().dim() != model.dim())
    throw ConfigError("target window dimension differs from the model's");
  if (!(margin() >= 0.0) || !std::isfinite(margin()))
    throw ConfigError("extension must be finite and >= 0");
  if (n_steps < 1) throw ConfigError("n_steps must be >= 1");
  if (n_replicates < 1) throw ConfigError("n_replicates must be >= 1");
  std::vector<std::string> warnings;
  if (margin() < model.range())
    warnings.push_back("extension below the interaction range; clipped counts "
                       "carry extra edge bias");
  return warnings;
}

nlohmann::json sim_config_to_json(const SimConfig& config) {
  return {{"model", model_to_json(config.model)},
          {"beta", config.beta},
          {"target_window", box_to_json(config.target())},
          {"extension", config.margin()},
          {"n_steps", config.n_steps},
          {"n_replicates", config.n_replicates},
          {"seed", config.seed}};
}

std::uint64_t replicate_seed(const SimConfig& config, std::uint64_t index) {
  return derive_seed(config.seed, index);
}

PointPattern mh_sample(const SimConfig& config, std::uint64_t seed) {
  config.validate();
  const Box window = config.simulation_window();
  const double volume = window.volume();
  const int dim = window.dim();
  const PairwiseInteraction& model = config.model;
  const double beta = config.beta;

  Rng rng(seed);
  GridState state(window, model.range());
  std::vector<double> u(dim);
  for (std::uint64_t step = 0; step < config.n_steps; ++step) {
    const bool birth = rng.uniform() < 0.5;
    if (birth) {
      for (int k = 0; k < dim; ++k)
        u[k] = rng.uniform(window.lower()[k], window.upper()[k]);
      const double accept = rng.uniform();
      const double n1 = static_cast<double>(state.size() + 1);
      const double lam = state.conditional_intensity(model, beta, u, SIZE_MAX);
      if (accept * n1 < lam * volume) state.add(u);
    } else {
      const std::size_t n = state.size();
      if (n == 0) continue;
      const std::size_t i = rng.index(n);
      const double accept = rng.uniform();
      const double lam =
          state.conditional_intensity(model, beta, state.point(i), i);
      // min(1, n / (λ(v, x\v)|W|)).
      if (accept * lam * volume < static_cast<double>(n)) state.remove(i);
    }
  }
  return PointPattern(window, state.coords());
}

std::vector<PointPattern> sample_replicates(const SimConfig& config) {
  config.validate();
  std::vector<std::optional<PointPattern>> slots(config.n_replicates);
  parallel_for(config.n_replicates, config.threads, [&](std::uint64_t i) {
    slots[i].emplace(mh_sample(config, replicate_seed(config, i)));
  });
  std::vector<PointPattern> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

MCEstimate estimate_intensity(const SimConfig& config) {
  config.validate();
  const Box target = config.target();
  MCEstimate est;
  est.replicate_counts.resize(config.n_replicates);
  parallel_for(config.n_replicates, config.threads, [&](std::uint64_t i) {
    const PointPattern x = mh_sample(config, replicate_seed(config, i));
    est.replicate_counts[i] = x.count_in(target);
  });

  const double area = target.volume();
  const auto m = static_cast<double>(config.n_replicates);
  std::vector<double> intensities;
  intensities.reserve(est.replicate_counts.size());
  double sum = 0.0;
  for (auto c : est.replicate_counts) {
    intensities.push_back(static_cast<double>(c) / area);
    sum += intensities.back();
  }
  est.mean_intensity = sum / m;
  if (config.n_replicates > 1) {
    double ss = 0.0;
    for (double v : intensities)
      ss += (v - est.mean_intensity) * (v - est.mean_intensity);
    est.std_error = std::sqrt(ss / (m - 1.0) / m);
  }
  std::sort(intensities.begin(), intensities.end());
  est.quartiles = {quantile_sorted(intensities, 0.25),
                   quantile_sorted(intensities, 0.5),
                   quantile_sorted(intensities, 0.75)};
  return est;
}

double gnz_residual(const PointPattern& pattern,
                    const PairwiseInteraction& model, double beta) {
  double total = 0.0;
  const double range = model.range();
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    double lam = beta;
    for (std::size_t j = 0; j < pattern.size() && lam > 0.0; ++j) {
      if (j == i) continue;
      const double r = distance(pattern.point(i), pattern.point(j));
      if (r <= range) lam *= eval_g(model, r);
    }
    if (lam == 0.0)
      throw ZeroConditionalIntensity("point " + std::to_string(i) +
                                     " has zero conditional intensity");
    total += 1.0 / lam;
  }
  return total - pattern.window().volume();
}

void write_pattern_dump(const SimConfig& config, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const std::vector<PointPattern> patterns = sample_replicates(config);
  const int dim = config.model.dim();
  std::string header;
  if (dim == 2) {
    header = "x,y";
  } else {
    for (int k = 0; k < dim; ++k)
      header += (k ? ",x" : "x") + std::to_string(k + 1);
  }

  nlohmann::json manifest = sim_config_to_json(config);
  manifest["replicates"] = nlohmann::json::array();
  char name[64];
  char num[32];
  for (std::size_t r = 0; r < patterns.size(); ++r) {
    std::snprintf(name, sizeof name, "replicate_%04zu.csv", r);
    std::ofstream out(fs::path(dir) / name);
    out << header << '\n';
    const PointPattern& x = patterns[r];
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto p = x.point(i);
      for (int k = 0; k < dim; ++k) {
        std::snprintf(num, sizeof num, "%.17g", p[k]);
        out << (k ? "," : "") << num;
      }
      out << '\n';
    }
    if (!out) throw std::runtime_error(std::string("failed writing ") + name);
    manifest["replicates"].push_back(
        {{"file", name}, {"seed", replicate_seed(config, r)}, {"n", x.size()}});
  }
  std::ofstream(fs::path(dir) / "manifest.json") << manifest.dump(2) << '\n';
}

}  // namespace pipp
