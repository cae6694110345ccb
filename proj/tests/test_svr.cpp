#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hsvr/cascade.hpp"
#include "hsvr/numerics.hpp"
#include "hsvr/svr.hpp"

using namespace hsvr;

namespace {

numerics::Matrix kernel_matrix(const std::vector<double>& x, double gamma) {
  const auto n = static_cast<Eigen::Index>(x.size());
  numerics::Matrix k(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      k(i, j) = gaussian_kernel(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)],
                                gamma);
  return k;
}

}  // namespace

TEST_CASE("gaussian kernel basics") {
  CHECK(gaussian_kernel(3.7, 3.7, 12.0) == doctest::Approx(1.0));
  CHECK(gaussian_kernel(0, 1, 1.0) == doctest::Approx(std::exp(-1.0)));
  double prev = 1.0;
  for (double g : {0.5, 1.0, 2.0, 10.0, 100.0}) {
    const double v = gaussian_kernel(0, 1, g);
    CHECK(v < prev);
    CHECK(v > 0.0);
    prev = v;
  }
}

TEST_CASE("constant target inside the tube yields no support vectors") {
  const std::vector<double> x{0, 0.5, 1, 1.5, 2};
  const std::vector<double> y(5, 3.25);
  SvrConfig cfg;
  cfg.c = 1.0;
  cfg.epsilon = 0.1;
  cfg.gamma = 4.0;
  const SvrModel m = fit(x, y, cfg);
  CHECK(m.support_x.empty());
  CHECK(m.bias == doctest::Approx(3.25));
  CHECK(predict_one(m, 0.77) == doctest::Approx(3.25));
}

TEST_CASE("fit validates input") {
  CHECK_THROWS_AS(fit({}, {}, SvrConfig{}), InvalidTrainingSet);
  CHECK_THROWS_AS(fit({1, 2}, {1}, SvrConfig{}), InvalidTrainingSet);
}

TEST_CASE("SMO matches the brute-force dual oracle on random small instances") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> xd(0, 2), yd(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 5;
    std::vector<double> x, y;
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(xd(rng) + 3.0 * static_cast<double>(i));  // keep x distinct
      y.push_back(yd(rng));
    }
    std::sort(x.begin(), x.end());
    SvrConfig cfg;
    cfg.c = 2.0;
    cfg.epsilon = 0.05;
    cfg.gamma = 0.7;
    cfg.kkt_tol = 1e-6;
    cfg.max_passes = 100000;
    const SvrFitDetail detail = fit_detailed(x, y, cfg);
    const auto oracle = numerics::qp_oracle_svr(kernel_matrix(x, cfg.gamma), y, cfg.c, cfg.epsilon);
    CHECK(detail.dual_objective == doctest::Approx(oracle.objective).epsilon(1e-6));
    CHECK(detail.dual_objective <= oracle.objective + 1e-9);
  }
}

TEST_CASE("dual feasibility and KKT cases hold on a dense fit") {
  const std::size_t n = 101;
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    y[i] = std::sin(2.0 * std::numbers::pi * x[i]);
  }
  SvrConfig cfg;
  cfg.c = 10.0;
  cfg.epsilon = 0.02;
  cfg.gamma = 36.0;
  cfg.kkt_tol = 1e-4;
  cfg.max_passes = 100000;
  const SvrFitDetail detail = fit_detailed(x, y, cfg);
  REQUIRE(detail.model.converged);

  double sum = 0.0;
  for (double b : detail.beta_full) {
    CHECK(std::abs(b) <= cfg.c + 1e-9);
    sum += b;
  }
  CHECK(std::abs(sum) <= 1e-6 * static_cast<double>(n) * cfg.c);

  const std::vector<double> pred = predict(detail.model, x);
  const double tol = 10 * cfg.kkt_tol;
  for (std::size_t i = 0; i < n; ++i) {
    const double err = std::abs(y[i] - pred[i]);
    if (err < cfg.epsilon - tol) CHECK(std::abs(detail.beta_full[i]) <= 1e-6 * cfg.c);
    if (std::abs(std::abs(detail.beta_full[i]) - cfg.c) <= 1e-9)
      CHECK(err >= cfg.epsilon - tol);
  }
}

TEST_CASE("sin(2pi x) fit at the heuristic scale stays within 0.03") {
  const std::size_t n = 1001;
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    y[i] = std::sin(2.0 * std::numbers::pi * x[i]);
  }
  SvrConfig cfg;
  cfg.epsilon = 0.02;
  cfg.c = c_rule(y);
  cfg.gamma = 36.0;  // sigma = 1/6
  const SvrModel m = fit(x, y, cfg);
  const std::vector<double> pred = predict(m, x);
  double max_err = 0;
  for (std::size_t i = 0; i < n; ++i) max_err = std::max(max_err, std::abs(y[i] - pred[i]));
  CHECK(max_err <= 0.03);
}

TEST_CASE("predict trivia") {
  SvrModel empty;
  empty.bias = 4.5;
  CHECK(predict_one(empty, 123.0) == doctest::Approx(4.5));

  SvrModel single;
  single.support_x = {0.0};
  single.beta = {1.0};
  single.gamma = 1.0;
  CHECK(predict_one(single, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("predictions are invariant to training-point order") {
  std::mt19937 rng(5);
  const std::size_t n = 60;
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<double>(i) / 30.0;
    y[i] = std::cos(3.0 * x[i]) + 0.1 * std::sin(20.0 * x[i]);
  }
  SvrConfig cfg;
  cfg.c = 5.0;
  cfg.epsilon = 0.01;
  cfg.gamma = 25.0;
  cfg.kkt_tol = 1e-6;
  cfg.max_passes = 200000;
  const SvrModel a = fit(x, y, cfg);

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = x[perm[i]];
    ys[i] = y[perm[i]];
  }
  const SvrModel b = fit(xs, ys, cfg);

  for (double q : {0.0, 0.31, 0.77, 1.5, 1.99})
    CHECK(std::abs(predict_one(a, q) - predict_one(b, q)) <= 1e-8);
}
