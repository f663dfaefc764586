#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "pipp/errors.hpp"
#include "pipp/quadrature.hpp"

using namespace pipp;
using PI = PairwiseInteraction;
using std::numbers::pi;

TEST_CASE("ball_volume") {
  CHECK(ball_volume(2, 0.1) == doctest::Approx(0.031415926535897934).epsilon(1e-14));
  CHECK(ball_volume(2, 0.0) == 0.0);
  CHECK(ball_volume(3, 1.0) == doctest::Approx(4.1887902047863905).epsilon(1e-14));
  CHECK(ball_volume(1, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("adaptive Simpson") {
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, pi) ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(adaptive_simpson([](double x) { return std::exp(-x * x); }, -6, 6) ==
        doctest::Approx(std::sqrt(pi)).epsilon(1e-10));
  SimpsonOptions tight{.abs_tol = 1e-300, .rel_tol = 0.0, .max_depth = 5};
  CHECK_THROWS_AS(adaptive_simpson([](double x) { return std::sqrt(x); }, 0, 1, tight),
                  QuadratureError);
}

TEST_CASE("integral_one_minus_g examples") {
  CHECK(integral_one_minus_g(PI::strauss(0.0, 0.1), 1) ==
        doctest::Approx(pi * 0.01).epsilon(1e-14));
  CHECK(integral_one_minus_g(PI::strauss(1.0, 0.3), 1) == 0.0);
  // [DERIVED] πR²/(1+2γ) = 0.015707963267948967; cross-checked by scipy quad.
  CHECK(integral_one_minus_g(PI::diggle_gratton(0.5, 0.1), 1) ==
        doctest::Approx(0.015707963267948967).epsilon(1e-10));
}

TEST_CASE("Diggle-Gratton quadrature matches the analytic radial integrals") {
  for (int d : {1, 2, 3}) {
    for (double gamma : {0.05, 0.2, 0.5, 0.8, 1.0}) {
      for (int p : {1, 2}) {
        const auto m = PI::diggle_gratton(gamma, 0.075, d);
        const double expected = oracle::diggle_gratton_integral(gamma, 0.075, d, p);
        CHECK(integral_one_minus_g(m, p) == doctest::Approx(expected).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("closed forms and quadrature agree for piecewise-constant models") {
  const std::vector<PI> models{
      PI::strauss(0.3, 0.1),        PI::strauss(0.0, 0.05, 3),
      PI::strauss_hard_core(0.5, 0.025, 0.05),
      PI::piecewise({0.2, 0.5}, {0.05, 0.1}),
      PI::piecewise({0.7, 0.0, 0.4}, {0.05, 0.1, 0.12}, 0.025, 1)};
  for (const auto& m : models) {
    for (int p : {1, 2}) {
      const double closed = integral_one_minus_g(m, p);
      const double quad = radial_quadrature(m, p);
      CHECK(std::abs(quad - closed) <= 1e-8 * closed);
    }
  }
}

TEST_CASE("compute_kappa") {
  for (double gamma : {0.0, 0.1, 0.25, 0.5, 0.9, 1.0}) {
    const double expected = (1 - gamma) * (1 - gamma);
    CHECK(std::abs(compute_kappa(PI::strauss(gamma, 0.1)) - expected) < 1e-12);
  }
  CHECK(compute_kappa(PI::strauss(0.0, 0.07)) == 1.0);
  // [DERIVED] max(π·0.000625/int_sq, int_sq/(π·0.0025)) = max(0.5714.., 0.4375).
  CHECK(compute_kappa(PI::strauss_hard_core(0.5, 0.025, 0.05)) ==
        doctest::Approx(0.5714285714285714).epsilon(1e-12));
  CHECK(compute_kappa(PI::diggle_gratton(0.0, 0.1)) == 1.0);
  CHECK(compute_kappa(PI::diggle_gratton(1.0, 0.1)) ==
        doctest::Approx(oracle::diggle_gratton_integral(1.0, 0.1, 2, 2) / (pi * 0.01)));
}

TEST_CASE("summarize") {
  const auto s = summarize(PI::strauss(0.5, 0.1));
  CHECK(s.G == doctest::Approx(0.0157080).epsilon(1e-5));
  CHECK(s.int_sq == doctest::Approx(0.00785398).epsilon(1e-5));
  CHECK(s.kappa == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(s.ball_R == doctest::Approx(0.0314159).epsilon(1e-5));
  CHECK(s.ball_delta == 0.0);

  const auto poisson = summarize(PI::strauss(1.0, 0.1));
  CHECK(poisson.G == 0.0);
  CHECK(poisson.int_sq == 0.0);
  CHECK(poisson.kappa == 0.0);

  const auto hard = summarize(PI::strauss(0.0, 0.1));
  CHECK(hard.G == hard.ball_R);
  CHECK(hard.int_sq == hard.ball_R);
  CHECK(hard.kappa == 1.0);
}

TEST_CASE("summary invariants across families") {
  const std::vector<PI> models{
      PI::strauss(0.4, 0.1), PI::strauss_hard_core(0.0, 0.02, 0.05),
      PI::strauss_hard_core(0.9, 0.02, 0.05), PI::piecewise({0.1, 0.6}, {0.05, 0.1}, 0.01),
      PI::diggle_gratton(0.05, 0.15), PI::diggle_gratton(0.7, 0.05)};
  for (const auto& m : models) {
    const auto s = summarize(m);
    CHECK(s.int_sq >= 0.0);
    CHECK(s.int_sq <= s.G * (1 + 1e-12));
    CHECK(s.G <= s.ball_R * (1 + 1e-12));
    CHECK(s.ball_delta <= s.int_sq * (1 + 1e-12));
    CHECK(s.kappa >= 0.0);
    CHECK(s.kappa <= 1.0);
  }
}

TEST_CASE("Strauss monotonicity and scaling") {
  double prev_g = INFINITY, prev_sq = INFINITY;
  for (int i = 0; i <= 20; ++i) {
    const double gamma = i / 20.0;
    const auto m = PI::strauss(gamma, 0.1);
    const double G = integral_one_minus_g(m, 1);
    const double sq = integral_one_minus_g(m, 2);
    CHECK(G < prev_g);
    if (i < 20) CHECK(sq < prev_sq);
    prev_g = G;
    prev_sq = sq;
  }
  for (int d : {1, 2, 3}) {
    const double small = integral_one_minus_g(PI::strauss(0.4, 0.05, d), 1);
    const double big = integral_one_minus_g(PI::strauss(0.4, 0.1, d), 1);
    CHECK(big / small == doctest::Approx(std::pow(2.0, d)).epsilon(1e-12));
  }
}
