#include "pipp/interaction.hpp"

#include <cmath>

#include "pipp/errors.hpp"

namespace pipp {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Strauss: return "Strauss";
    case Family::StraussHardCore: return "StraussHardCore";
    case Family::PiecewiseStraussHardCore: return "PiecewiseStraussHardCore";
    case Family::DiggleGratton: return "DiggleGratton";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::Strauss, Family::StraussHardCore,
                   Family::PiecewiseStraussHardCore, Family::DiggleGratton})
    if (to_string(f) == name) return f;
  throw ConfigError("unknown model family '" + std::string(name) + "'");
}

PairwiseInteraction::PairwiseInteraction(Family family,
                                         std::vector<double> gamma,
                                         std::vector<double> radii,
                                         double hardcore, int dim)
    : family_(family),
      gamma_(std::move(gamma)),
      radii_(std::move(radii)),
      hardcore_(hardcore),
      dim_(dim) {
  const std::string name(to_string(family_));
  if (dim_ < 1) throw ConfigError(name + ": dimension must be >= 1");
  if (gamma_.empty() || radii_.empty())
    throw ConfigError(name + ": gamma and radii must be non-empty");
  for (double g : gamma_)
    if (!(g >= 0.0 && g <= 1.0))
      throw ConfigError(name + ": interaction parameters must lie in [0,1]");
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (!std::isfinite(radii_[i]) || !(radii_[i] > 0.0))
      throw ConfigError(name + ": radii must be finite and positive");
    if (i > 0 && !(radii_[i] > radii_[i - 1]))
      throw ConfigError(name + ": radii must be strictly increasing");
  }
  if (!std::isfinite(hardcore_) || hardcore_ < 0.0)
    throw ConfigError(name + ": hard core must be finite and >= 0");

  if (family_ == Family::PiecewiseStraussHardCore) {
    if (gamma_.size() != radii_.size())
      throw ConfigError(name + ": need one gamma per annulus (|gamma| == |radii|)");
    if (!(hardcore_ < radii_.front()))
      throw ConfigError(name + ": hard core must be below the first break");
    return;
  }
  if (gamma_.size() != 1 || radii_.size() != 1)
    throw ConfigError(name + ": expects a single gamma and a single range");
  if (family_ == Family::StraussHardCore) {
    if (!(hardcore_ < radii_.front()))
      throw ConfigError(name + ": hard core must be below the range");
  } else if (hardcore_ != 0.0) {
    throw ConfigError(name + ": this family has no hard-core parameter");
  }
}

PairwiseInteraction PairwiseInteraction::strauss(double gamma, double range,
                                                 int dim) {
  return {Family::Strauss, {gamma}, {range}, 0.0, dim};
}

PairwiseInteraction PairwiseInteraction::strauss_hard_core(double gamma,
                                                           double hardcore,
                                                           double range,
                                                           int dim) {
  return {Family::StraussHardCore, {gamma}, {range}, hardcore, dim};
}

PairwiseInteraction PairwiseInteraction::piecewise(std::vector<double> gamma,
                                                   std::vector<double> breaks,
                                                   double hardcore, int dim) {
  return {Family::PiecewiseStraussHardCore, std::move(gamma), std::move(breaks),
          hardcore, dim};
}

PairwiseInteraction PairwiseInteraction::diggle_gratton(double gamma,
                                                        double range, int dim) {
  return {Family::DiggleGratton, {gamma}, {range}, 0.0, dim};
}

PairwiseInteraction PairwiseInteraction::with_gamma1(double gamma1) const {
  std::vector<double> g = gamma_;
  g.front() = gamma1;
  return {family_, std::move(g), radii_, hardcore_, dim_};
}

double eval_g(const PairwiseInteraction& model, double r) {
  const double range = model.range();
  if (r > range) return 1.0;
  if (r < model.hardcore()) return 0.0;
  const auto& gamma = model.gamma();
  switch (model.family()) {
    case Family::Strauss:
    case Family::StraussHardCore:
      return gamma.front();
    case Family::PiecewiseStraussHardCore: {
      // Shared breakpoints belong to the inner annulus.
      const auto& radii = model.radii();
      for (std::size_t i = 0; i < radii.size(); ++i)
        if (r <= radii[i]) return gamma[i];
      return 1.0;
    }
    case Family::DiggleGratton: {
      const double t = r / range;
      const double gm = gamma.front();
      if (gm == 0.0) return t < 1.0 ? 0.0 : 1.0;  // t^inf
      return std::pow(t, 1.0 / gm);
    }
  }
  return 1.0;
}

double papangelou(const PairwiseInteraction& model, double beta,
                  std::span<const double> u, const PointPattern& x) {
  const double range = model.range();
  double value = beta;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = distance(u, x.point(i));
    if (r > range) continue;
    value *= eval_g(model, r);
    if (value == 0.0) return 0.0;
  }
  return value;
}

}  // namespace pipp
