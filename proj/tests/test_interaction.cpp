#include <doctest.h>

#include <cmath>
#include <random>

#include "pipp/errors.hpp"
#include "pipp/interaction.hpp"
#include "pipp/model_json.hpp"

using namespace pipp;
using PI = PairwiseInteraction;

namespace {

std::vector<PI> sample_models() {
  return {PI::strauss(0.5, 0.15),
          PI::strauss(0.0, 0.1),
          PI::strauss_hard_core(0.3, 0.025, 0.05),
          PI::piecewise({0.8, 0.2}, {0.1, 0.15}, 0.05),
          PI::piecewise({0.0, 0.5}, {0.05, 0.1}),
          PI::diggle_gratton(0.05, 0.15),
          PI::diggle_gratton(0.3, 0.15),
          PI::diggle_gratton(1.0, 0.15),
          PI::diggle_gratton(0.0, 0.1)};
}

PointPattern random_pattern(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> c;
  for (std::size_t i = 0; i < 2 * n; ++i) c.push_back(u(rng));
  return PointPattern(Box::unit(), c);
}

}  // namespace

TEST_CASE("eval_g examples") {
  CHECK(eval_g(PI::strauss(0.5, 0.15), 0.10) == 0.5);
  for (const auto& m : sample_models()) CHECK(eval_g(m, m.range() + 1) == 1.0);
  CHECK(eval_g(PI::diggle_gratton(1.0, 0.15), 0.075) == doctest::Approx(0.5));
}

TEST_CASE("eval_g boundary conventions") {
  const auto shc = PI::strauss_hard_core(0.3, 0.025, 0.05);
  CHECK(eval_g(shc, 0.0249999) == 0.0);
  CHECK(eval_g(shc, 0.025) == 0.3);  // δ <= r
  CHECK(eval_g(shc, 0.05) == 0.3);   // r <= R
  CHECK(eval_g(shc, 0.0500001) == 1.0);

  const auto pw = PI::piecewise({0.8, 0.2}, {0.1, 0.15}, 0.05);
  CHECK(eval_g(pw, 0.01) == 0.0);
  CHECK(eval_g(pw, 0.07) == 0.8);
  CHECK(eval_g(pw, 0.12) == 0.2);
  CHECK(eval_g(pw, 0.16) == 1.0);

  // Diggle-Gratton γ = 0: t^inf = 0 on (0,1), 1^inf = 1.
  const auto dg0 = PI::diggle_gratton(0.0, 0.1);
  CHECK(eval_g(dg0, 0.0) == 0.0);
  CHECK(eval_g(dg0, 0.0999) == 0.0);
  CHECK(eval_g(dg0, 0.1) == 1.0);
}

TEST_CASE("g stays in [0,1] and equals gamma on the Strauss band") {
  for (const auto& m : sample_models()) {
    for (int i = 0; i <= 400; ++i) {
      const double r = m.range() * 1.2 * i / 400.0;
      const double g = eval_g(m, r);
      CHECK(g >= 0.0);
      CHECK(g <= 1.0);
    }
  }
  for (double gamma : {0.0, 0.2, 0.7, 1.0}) {
    const auto s = PI::strauss(gamma, 0.1);
    for (int i = 0; i <= 100; ++i) CHECK(eval_g(s, 0.1 * i / 100.0) == gamma);
  }
}

TEST_CASE("papangelou examples") {
  const std::vector<double> u{0.5, 0.5};
  const PointPattern empty(Box::unit());
  for (const auto& m : sample_models()) CHECK(papangelou(m, 42.0, u, empty) == 42.0);

  const PointPattern two(Box::unit(), {{0.55, 0.5}, {0.5, 0.43}, {0.9, 0.9}});
  CHECK(papangelou(PI::strauss(0.5, 0.1), 100.0, u, two) == doctest::Approx(25.0));

  const PointPattern close(Box::unit(), {{0.51, 0.5}, {0.2, 0.2}});
  CHECK(papangelou(PI::strauss_hard_core(0.5, 0.025, 0.05), 7.0, u, close) == 0.0);
}

TEST_CASE("papangelou is locally stable and has finite range") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (const auto& m : sample_models()) {
    for (int trial = 0; trial < 40; ++trial) {
      const PointPattern x = random_pattern(rng, 30);
      const std::vector<double> u{unif(rng), unif(rng)};
      const double full = papangelou(m, 80.0, u, x);
      CHECK(full <= 80.0);

      std::vector<double> near;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (distance(u, x.point(i)) <= m.range())
          near.insert(near.end(), x.point(i).begin(), x.point(i).end());
      CHECK(papangelou(m, 80.0, u, PointPattern(Box::unit(), near)) == full);
    }
  }
}

TEST_CASE("clip") {
  const Box outer({-0.2, -0.2}, {1.2, 1.2});
  const PointPattern x(outer, {{-0.1, 0.5}, {0.2, 0.3}, {0.5, 0.5}, {1.1, 1.1}, {0.9, 0.1}});
  const PointPattern c = clip(x, Box::unit());
  CHECK(c.size() == 3);
  CHECK(c.window() == Box::unit());
  CHECK(c.coords() == std::vector<double>{0.2, 0.3, 0.5, 0.5, 0.9, 0.1});

  CHECK(clip(PointPattern(outer), Box::unit()).empty());

  const PointPattern inside(outer, {{0.1, 0.1}, {0.7, 0.2}});
  CHECK(clip(inside, Box::unit()).coords() == inside.coords());

  CHECK_THROWS_AS(clip(inside, Box({-1, -1}, {1, 1})), ConfigError);
}

TEST_CASE("point pattern invariants") {
  CHECK_THROWS_AS(PointPattern(Box::unit(), std::vector<double>{0.5, 1.5}), ConfigError);
  CHECK_THROWS_AS(PointPattern(Box::unit(), {{0.5, 0.5}, {0.5, 0.5}}), ConfigError);
  const PointPattern x(Box::unit(), {{0.1, 0.1}, {0.4, 0.5}, {0.1, 0.2}});
  CHECK(x.min_pair_distance() == doctest::Approx(0.1));
  CHECK(x.without(1).coords() == std::vector<double>{0.1, 0.1, 0.1, 0.2});
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(PI::strauss(1.2, 0.1), ConfigError);
  CHECK_THROWS_AS(PI::strauss(-0.1, 0.1), ConfigError);
  CHECK_THROWS_AS(PI::strauss(0.5, 0.0), ConfigError);
  CHECK_THROWS_AS(PI::strauss(0.5, INFINITY), ConfigError);
  CHECK_THROWS_AS(PI::strauss_hard_core(0.5, 0.1, 0.05), ConfigError);
  CHECK_THROWS_AS(PI::piecewise({0.5}, {0.05, 0.1}), ConfigError);
  CHECK_THROWS_AS(PI::piecewise({0.5, 0.5}, {0.1, 0.05}), ConfigError);
  CHECK_THROWS_AS(PI::piecewise({0.5, 0.5}, {0.05, 0.1}, 0.05), ConfigError);
  CHECK_THROWS_AS(PI(Family::Strauss, {0.5}, {0.1}, 0.02), ConfigError);
  CHECK_THROWS_AS(PI::diggle_gratton(0.5, 0.1, 0), ConfigError);
  CHECK_NOTHROW(PI::strauss_hard_core(2.0 / 3.0, 0.0, 0.05));
}

TEST_CASE("model JSON") {
  for (const auto& m : sample_models()) CHECK(model_from_json(model_to_json(m)) == m);

  const auto j = nlohmann::json::parse(
      R"({"family":"PiecewiseStraussHardCore","gamma":[0.2,0.5],"radii":[0.05,0.1],"hardcore":0.025,"dim":2})");
  const PI m = model_from_json(j);
  CHECK(m.family() == Family::PiecewiseStraussHardCore);
  CHECK(m.hardcore() == 0.025);
  CHECK(model_from_json(nlohmann::json::parse(R"({"family":"Strauss","gamma":[0.5],"radii":[0.1]})")).dim() == 2);

  CHECK_THROWS_AS(model_from_json(nlohmann::json::parse(R"({"family":"Gauss","gamma":[0.5],"radii":[0.1]})")), ConfigError);
  CHECK_THROWS_AS(model_from_json(nlohmann::json::parse(R"({"family":"Strauss","gamma":"x","radii":[0.1]})")), ConfigError);
  CHECK_THROWS_AS(model_from_json(nlohmann::json::parse(R"({"gamma":[0.5],"radii":[0.1]})")), ConfigError);
  CHECK_THROWS_AS(model_from_json(nlohmann::json::parse("[1,2]")), ConfigError);
}
