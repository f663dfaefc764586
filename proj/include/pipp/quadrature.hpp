#pragma once

#include <functional>

#include "pipp/interaction.hpp"

namespace pipp {

struct InteractionSummary {
  double G = 0.0;           // ∫ (1 - g)
  double int_sq = 0.0;      // ∫ (1 - g)^2
  double kappa = 0.0;       // repulsiveness in [0,1]
  double ball_R = 0.0;      // |B(0,R)|
  double ball_delta = 0.0;  // |B(0,δ)|
};

/// Volume of the d-dimensional ball of radius rho.
double ball_volume(int dim, double rho);

struct SimpsonOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 50;
};

/// Adaptive Simpson quadrature of f over [a, b]. Throws QuadratureError when
/// a subinterval still misses its tolerance at max_depth.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, const SimpsonOptions& opts = {});

/// ∫_{R^d} (1 - g(u))^power du by radial adaptive Simpson, split at every
/// breakpoint of g. Works for every family.
double radial_quadrature(const PairwiseInteraction& model, int power);

/// ∫_{R^d} (1 - g(u))^power du, power 1 or 2. Closed form for piecewise
/// constant g, radial quadrature otherwise.
double integral_one_minus_g(const PairwiseInteraction& model, int power);

/// max(|B(0,δ)| / ∫(1-g)^2, ∫(1-g)^2 / |B(0,R)|), with 0 in the Poisson limit.
double compute_kappa(const PairwiseInteraction& model);

InteractionSummary summarize(const PairwiseInteraction& model);

}  // namespace pipp
