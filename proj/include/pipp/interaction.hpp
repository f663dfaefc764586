#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pipp/geometry.hpp"

namespace pipp {

enum class Family { Strauss, StraussHardCore, PiecewiseStraussHardCore, DiggleGratton };

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);

/// Isotropic, purely inhibitory pairwise interaction function g with finite
/// range. Immutable; validated on construction.
///
/// Parameter layout per family:
///   Strauss                   gamma = {γ},        radii = {R},  hardcore = 0
///   StraussHardCore           gamma = {γ},        radii = {R},  hardcore = δ < R
///   PiecewiseStraussHardCore  gamma = {γ1..γI},   radii = {R2..R_{I+1}}, hardcore = δ = R1 < R2
///   DiggleGratton             gamma = {γ},        radii = {R},  hardcore = 0
/// Every γ lies in [0,1].
class PairwiseInteraction {
 public:
  PairwiseInteraction(Family family, std::vector<double> gamma,
                      std::vector<double> radii, double hardcore = 0.0,
                      int dim = 2);

  static PairwiseInteraction strauss(double gamma, double range, int dim = 2);
  static PairwiseInteraction strauss_hard_core(double gamma, double hardcore,
                                               double range, int dim = 2);
  static PairwiseInteraction piecewise(std::vector<double> gamma,
                                       std::vector<double> breaks,
                                       double hardcore = 0.0, int dim = 2);
  static PairwiseInteraction diggle_gratton(double gamma, double range,
                                            int dim = 2);

  Family family() const { return family_; }
  const std::vector<double>& gamma() const { return gamma_; }
  const std::vector<double>& radii() const { return radii_; }
  double hardcore() const { return hardcore_; }
  int dim() const { return dim_; }
  double range() const { return radii_.back(); }

  /// True when g is piecewise constant in r (every family but Diggle-Gratton).
  bool piecewise_constant() const { return family_ != Family::DiggleGratton; }

  /// Copy with the first interaction parameter replaced.
  PairwiseInteraction with_gamma1(double gamma1) const;

  friend bool operator==(const PairwiseInteraction&,
                         const PairwiseInteraction&) = default;

 private:
  Family family_;
  std::vector<double> gamma_;
  std::vector<double> radii_;
  double hardcore_;
  int dim_;
};

/// g at distance r >= 0. Hard core is open (r < δ gives 0), interaction bands
/// are closed (δ <= r <= R), and g = 1 beyond R.
double eval_g(const PairwiseInteraction& model, double r);

/// Papangelou conditional intensity β ∏_{v∈x} g(‖u − v‖).
double papangelou(const PairwiseInteraction& model, double beta,
                  std::span<const double> u, const PointPattern& x);

}  // namespace pipp
