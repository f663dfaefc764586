#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pipp/interaction.hpp"
#include "pipp/quadrature.hpp"

namespace pipp {

/// Root of a fixed-point equation plus solver diagnostics.
struct FixedPoint {
  double lambda = 0.0;
  double residual = 0.0;  // |lambda - f(lambda)|
  int iterations = 0;
};

struct ApproxResult {
  double lambda_ps = 0.0;
  double lambda_dpp = 0.0;
  double residual_ps = 0.0;
  double residual_dpp = 0.0;
  int iterations_ps = 0;
  int iterations_dpp = 0;
};

inline constexpr double kSolverRelTol = 1e-12;
inline constexpr int kSolverMaxIter = 200;

/// Safeguarded Newton for an increasing function h on [lo, hi] with
/// h(lo) < 0 <= h(hi). `h` returns (h(x), h'(x)). Stops once |h| <= tol.
/// Throws SolverError if the tolerance is not met within max_iter steps.
FixedPoint solve_bracketed(
    const std::function<std::pair<double, double>(double)>& h, double lo,
    double hi, double tol, int max_iter = kSolverMaxIter);

/// β exp(-λG).
double f_ps(double beta, double G, double lambda);

/// β (1 - λG/(1 + λG/κ))^(1 + λG/κ); reduces to f_ps at κ = 0.
double f_dpp(double beta, double G, double kappa, double lambda);

/// λ = β exp(-λG), solved on [0, β].
FixedPoint solve_lambda_ps(double beta, double G);

/// λ = f_dpp(λ), solved on [0, β]. κ = 0 or G = 0 dispatch to solve_lambda_ps.
FixedPoint solve_lambda_dpp(double beta, double G, double kappa);

ApproxResult approximate(double beta, double G, double kappa);
ApproxResult approximate(const PairwiseInteraction& model, double beta);

/// Principal branch of the inverse of x -> x e^x, for y >= 0.
double lambert_w0(double y);

/// x (1 - κx/(1+x))^(-1-x), the map inverted by lambert_w_kappa.
double w_kappa_forward(double x, double kappa);

/// Inverse of w_kappa_forward on [0, inf), for y >= 0 and κ in [0,1].
double lambert_w_kappa(double y, double kappa);

/// W(βG)/G: the Poisson-saddlepoint intensity through the Lambert W route.
double lambda_ps_closed_form(double beta, double G);

/// W_κ(βG/κ)/(G/κ): the DPP intensity through the W_κ route.
double lambda_dpp_closed_form(double beta, double G, double kappa);

/// Eigenvalues of the modified kernel; each lies in [0,1].
class EigenvalueSpec {
 public:
  explicit EigenvalueSpec(std::vector<double> eigenvalues);

  /// N copies of λG/N; requires N >= λG.
  static EigenvalueSpec equal(double lambda_g, std::uint64_t n);

  const std::vector<double>& eigenvalues() const { return eigenvalues_; }

 private:
  std::vector<double> eigenvalues_;
};

/// ∏ (1 - λ̃_i).
double dpp_laplace_product(const EigenvalueSpec& spec);

/// (1 - λG/N)^N without materialising the eigenvalues.
double equal_eigenvalue_laplace(double lambda_g, std::uint64_t n);

/// Smallest λ in (0, β] with λ = β(1 - λG/N)^N, N = ceil(λG/κ), or nullopt
/// when the discontinuous map has no fixed point. Requires G > 0, κ > 0.
std::optional<FixedPoint> solve_lambda_dpp_discrete(double beta, double G,
                                                    double kappa);

}  // namespace pipp
