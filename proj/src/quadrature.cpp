#include "pipp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "pipp/errors.hpp"

namespace pipp {

namespace {

struct SimpsonState {
  const std::function<double(double)>& f;
  const SimpsonOptions& opts;
};

double simpson_recurse(const SimpsonState& st, double a, double fa, double m,
                       double fm, double b, double fb, double whole,
                       double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = st.f(lm);
  const double frm = st.f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth >= st.opts.max_depth)
    throw QuadratureError("adaptive Simpson did not converge on [" +
                          std::to_string(a) + ", " + std::to_string(b) + "]");
  return simpson_recurse(st, a, fa, lm, flm, m, fm, left, 0.5 * tol,
                         depth + 1) +
         simpson_recurse(st, m, fm, rm, frm, b, fb, right, 0.5 * tol,
                         depth + 1);
}

void check_power(int power) {
  if (power != 1 && power != 2)
    throw ConfigError("integral power must be 1 or 2");
}

double kappa_from(double int_sq, double ball_delta, double ball_range) {
  // δ > 0 forces int_sq >= |B(0,δ)| > 0, so this is the Poisson limit.
  if (int_sq == 0.0) return 0.0;
  return std::min(1.0, std::max(ball_delta / int_sq, int_sq / ball_range));
}

}  // namespace

double ball_volume(int dim, double rho) {
  const double half = 0.5 * dim;
  return std::pow(std::numbers::pi, half) * std::pow(rho, dim) /
         std::tgamma(half + 1.0);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, const SimpsonOptions& opts) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  // Relative part of the tolerance is taken against the coarse estimate.
  const double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(whole));
  SimpsonState st{f, opts};
  return simpson_recurse(st, a, fa, m, fm, b, fb, whole, tol, 0);
}

double radial_quadrature(const PairwiseInteraction& model, int power) {
  check_power(power);
  const int d = model.dim();
  const double range = model.range();
  const double surface = d * ball_volume(d, 1.0);

  std::vector<double> cuts{0.0};
  if (model.hardcore() > 0.0) cuts.push_back(model.hardcore());
  for (double r : model.radii()) cuts.push_back(r);

  SimpsonOptions opts;
  const double abs_budget = 1e-10 * ball_volume(d, range);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    // g is sampled strictly inside (a, b) so the boundary convention of the
    // neighbouring piece never leaks in.
    const double a_in = std::nextafter(a, b), b_in = std::nextafter(b, a);
    auto integrand = [&](double r) {
      const double one_minus = 1.0 - eval_g(model, std::clamp(r, a_in, b_in));
      const double w = power == 1 ? one_minus : one_minus * one_minus;
      return surface * w * std::pow(r, d - 1);
    };
    opts.abs_tol = abs_budget * (b - a) / range;
    total += adaptive_simpson(integrand, a, b, opts);
  }
  return total;
}

double integral_one_minus_g(const PairwiseInteraction& model, int power) {
  check_power(power);
  if (!model.piecewise_constant()) return radial_quadrature(model, power);

  const int d = model.dim();
  double inner = model.hardcore();
  double inner_vol = ball_volume(d, inner);
  double total = inner_vol;  // hard-core ball, (1 - 0)^p = 1
  for (std::size_t i = 0; i < model.radii().size(); ++i) {
    const double outer_vol = ball_volume(d, model.radii()[i]);
    const double w = 1.0 - model.gamma()[i];
    total += (power == 1 ? w : w * w) * (outer_vol - inner_vol);
    inner_vol = outer_vol;
  }
  return total;
}

double compute_kappa(const PairwiseInteraction& model) {
  return kappa_from(integral_one_minus_g(model, 2),
                    ball_volume(model.dim(), model.hardcore()),
                    ball_volume(model.dim(), model.range()));
}

InteractionSummary summarize(const PairwiseInteraction& model) {
  InteractionSummary s;
  s.G = integral_one_minus_g(model, 1);
  s.int_sq = integral_one_minus_g(model, 2);
  s.ball_R = ball_volume(model.dim(), model.range());
  s.ball_delta = ball_volume(model.dim(), model.hardcore());
  s.kappa = kappa_from(s.int_sq, s.ball_delta, s.ball_R);
  return s;
}

}  // namespace pipp
