#include "pipp/intensity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pipp/errors.hpp"

namespace pipp {

namespace {

void check_rate_inputs(double beta, double G) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw ConfigError("beta must be positive and finite");
  if (!(G >= 0.0) || !std::isfinite(G))
    throw ConfigError("G must be finite and >= 0");
}

void check_kappa(double kappa) {
  if (!(kappa >= 0.0 && kappa <= 1.0))
    throw ConfigError("kappa must lie in [0,1]");
}

// log f_dpp - log β and its λ-derivative, for κ > 0.
std::pair<double, double> log_dpp_factor(double G, double kappa,
                                         double lambda) {
  const double a = G / kappa;
  const double x = a * lambda;
  const double t = lambda * G / (1.0 + x);
  const double log_base = std::log1p(-t);
  const double value = (1.0 + x) * log_base;
  const double deriv = a * log_base - G / (1.0 + x - lambda * G);
  return {value, deriv};
}

}  // namespace

FixedPoint solve_bracketed(
    const std::function<std::pair<double, double>(double)>& h, double lo,
    double hi, double tol, int max_iter) {
  double x = 0.5 * (lo + hi);
  double best_x = x;
  double best_abs = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= max_iter; ++it) {
    const auto [hx, dhx] = h(x);
    if (std::abs(hx) < best_abs) {
      best_abs = std::abs(hx);
      best_x = x;
    }
    if (std::abs(hx) <= tol) return {x, std::abs(hx), it};
    if (hx < 0.0)
      lo = x;
    else
      hi = x;
    double next = dhx > 0.0 ? x - hx / dhx : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() *
                                     std::max(1.0, std::abs(x)))
      break;
    x = next;
  }
  if (best_abs <= tol) return {best_x, best_abs, max_iter};
  throw SolverError("root finder missed tolerance " + std::to_string(tol) +
                    " (best residual " + std::to_string(best_abs) + ")");
}

double f_ps(double beta, double G, double lambda) {
  return beta * std::exp(-lambda * G);
}

double f_dpp(double beta, double G, double kappa, double lambda) {
  if (kappa == 0.0) return f_ps(beta, G, lambda);
  if (G == 0.0 || lambda == 0.0) return beta;
  return beta * std::exp(log_dpp_factor(G, kappa, lambda).first);
}

FixedPoint solve_lambda_ps(double beta, double G) {
  check_rate_inputs(beta, G);
  if (G == 0.0) return {beta, 0.0, 0};
  auto h = [&](double lambda) {
    const double f = f_ps(beta, G, lambda);
    return std::pair{lambda - f, 1.0 + G * f};
  };
  return solve_bracketed(h, 0.0, beta, kSolverRelTol * beta);
}

FixedPoint solve_lambda_dpp(double beta, double G, double kappa) {
  check_rate_inputs(beta, G);
  check_kappa(kappa);
  if (G == 0.0 || kappa == 0.0) return solve_lambda_ps(beta, G);
  auto h = [&](double lambda) {
    const auto [log_factor, dlog] = log_dpp_factor(G, kappa, lambda);
    const double f = beta * std::exp(log_factor);
    return std::pair{lambda - f, 1.0 - f * dlog};
  };
  return solve_bracketed(h, 0.0, beta, kSolverRelTol * beta);
}

ApproxResult approximate(double beta, double G, double kappa) {
  const FixedPoint ps = solve_lambda_ps(beta, G);
  const FixedPoint dpp = solve_lambda_dpp(beta, G, kappa);
  return {ps.lambda, dpp.lambda, ps.residual, dpp.residual, ps.iterations,
          dpp.iterations};
}

ApproxResult approximate(const PairwiseInteraction& model, double beta) {
  const InteractionSummary s = summarize(model);
  return approximate(beta, s.G, s.kappa);
}

double lambert_w0(double y) {
  if (!(y >= 0.0)) throw ConfigError("lambert_w0 needs y >= 0");
  if (y == 0.0) return 0.0;
  if (std::isinf(y)) return y;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  if (y > std::numbers::e) {
    // Newton on w + log w = log y keeps exponentials out of large arguments.
    const double log_y = std::log(y);
    double w = log_y - std::log(log_y);
    for (int it = 0; it < 100; ++it) {
      const double step = (w + std::log(w) - log_y) / (1.0 + 1.0 / w);
      w -= step;
      if (std::abs(step) <= 2.0 * kEps * w) break;
    }
    return w;
  }
  // Halley on w e^w = y.
  double w = std::log1p(y);
  for (int it = 0; it < 100; ++it) {
    const double ew = std::exp(w);
    const double r = w * ew - y;
    const double step = r / (ew * (w + 1.0) - (w + 2.0) * r / (2.0 * w + 2.0));
    w -= step;
    if (std::abs(step) <= 2.0 * kEps * std::max(w, kEps)) break;
  }
  return w;
}

double w_kappa_forward(double x, double kappa) {
  check_kappa(kappa);
  if (x == 0.0) return 0.0;
  return x * std::exp(-(1.0 + x) * std::log1p(-kappa * x / (1.0 + x)));
}

double lambert_w_kappa(double y, double kappa) {
  check_kappa(kappa);
  if (!(y >= 0.0)) throw ConfigError("lambert_w_kappa needs y >= 0");
  if (y == 0.0 || kappa == 0.0) return y;
  const double log_y = std::log(y);
  // log w_kappa_forward(x) - log y, increasing in x; and its derivative.
  auto psi = [&](double x) {
    const double t = kappa * x / (1.0 + x);
    const double value = std::log(x) - (1.0 + x) * std::log1p(-t) - log_y;
    const double deriv =
        1.0 / x - std::log1p(-t) + kappa / (1.0 + x - kappa * x);
    return std::pair{value, deriv};
  };
  // w_kappa_forward(x) >= x, so the root lies in (0, y].
  double lo = 0.0, hi = y;
  double x = std::min(y, std::log1p(y));
  const double tol = 4.0 * std::numeric_limits<double>::epsilon() *
                     std::max(1.0, std::abs(log_y));
  for (int it = 0; it < kSolverMaxIter; ++it) {
    const auto [v, dv] = psi(x);
    if (std::abs(v) <= tol) return x;
    if (v < 0.0)
      lo = x;
    else
      hi = x;
    double next = x - v / dv;
    if (!(next > lo && next < hi))
      next = (lo > 0.0 && hi > 4.0 * lo) ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (next == x) return x;
    x = next;
  }
  throw SolverError("lambert_w_kappa did not converge");
}

double lambda_ps_closed_form(double beta, double G) {
  check_rate_inputs(beta, G);
  if (G == 0.0) return beta;
  return lambert_w0(beta * G) / G;
}

double lambda_dpp_closed_form(double beta, double G, double kappa) {
  check_rate_inputs(beta, G);
  check_kappa(kappa);
  if (G == 0.0 || kappa == 0.0) return lambda_ps_closed_form(beta, G);
  const double scale = G / kappa;
  return lambert_w_kappa(beta * scale, kappa) / scale;
}

EigenvalueSpec::EigenvalueSpec(std::vector<double> eigenvalues)
    : eigenvalues_(std::move(eigenvalues)) {
  for (double v : eigenvalues_)
    if (!(v >= 0.0 && v <= 1.0))
      throw ConfigError("eigenvalues must lie in [0,1]");
}

EigenvalueSpec EigenvalueSpec::equal(double lambda_g, std::uint64_t n) {
  if (!(lambda_g >= 0.0) || static_cast<double>(n) < lambda_g)
    throw ConfigError("equal eigenvalues need 0 <= lambda*G <= N");
  return EigenvalueSpec(
      std::vector<double>(n, n == 0 ? 0.0 : lambda_g / static_cast<double>(n)));
}

double dpp_laplace_product(const EigenvalueSpec& spec) {
  double p = 1.0;
  for (double v : spec.eigenvalues()) p *= 1.0 - v;
  return p;
}

double equal_eigenvalue_laplace(double lambda_g, std::uint64_t n) {
  if (n == 0) return 1.0;
  const double nd = static_cast<double>(n);
  if (!(lambda_g >= 0.0) || nd < lambda_g)
    throw ConfigError("equal eigenvalues need 0 <= lambda*G <= N");
  if (lambda_g == nd) return 0.0;
  return std::exp(nd * std::log1p(-lambda_g / nd));
}

std::optional<FixedPoint> solve_lambda_dpp_discrete(double beta, double G,
                                                    double kappa) {
  check_rate_inputs(beta, G);
  if (!(G > 0.0) || !(kappa > 0.0 && kappa <= 1.0))
    throw ConfigError("discrete DPP map needs G > 0 and kappa in (0,1]");
  const double width = kappa / G;
  const double tol = kSolverRelTol * beta;
  // N = n on the interval ((n-1)κ/G, nκ/G]; there h_n is increasing, so each
  // interval holds at most one root.
  for (std::uint64_t n = 1;; ++n) {
    const double nd = static_cast<double>(n);
    const double lo = (nd - 1.0) * width;
    if (lo >= beta) break;
    const double hi = std::min(nd * width, beta);
    auto h = [&](double lambda) {
      const double base = 1.0 - lambda * G / nd;
      const double f = beta * std::pow(base, nd);
      return std::pair{lambda - f, 1.0 + beta * G * std::pow(base, nd - 1.0)};
    };
    const double h_lo = h(lo).first;
    const double h_hi = h(hi).first;
    if (h_lo >= 0.0 || h_hi < 0.0) continue;  // lo itself belongs to N = n-1
    return solve_bracketed(h, lo, hi, tol);
  }
  return std::nullopt;
}

}  // namespace pipp
