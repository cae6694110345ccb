#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hsvr/cascade.hpp"
#include "hsvr/scales_fft.hpp"
#include "hsvr/signals.hpp"

using namespace hsvr;

TEST_CASE("epsilon rule is one percent of the range") {
  CHECK(epsilon_rule({-1.0, 0.3, 1.0}) == doctest::Approx(0.02));
  CHECK(epsilon_rule({5.0, 5.0, 5.0}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(epsilon_rule({}), InvalidTrainingSet);
}

TEST_CASE("epsilon rule on the 500-step Lorenz x(t) training set") {
  const auto traj = signals::lorenz_trajectory(10.0, 2001);
  std::vector<double> train_y;
  for (std::size_t i = 0; i < traj.x.size(); i += 4) train_y.push_back(traj.x.y[i]);
  CHECK(epsilon_rule(train_y) == doctest::Approx(0.314).epsilon(0.05));
}

TEST_CASE("c rule is five times the residual range, with a degenerate floor") {
  CHECK(c_rule({-1.0, 1.0}) == doctest::Approx(10.0));
  CHECK(c_rule({0.0, 0.0, 0.0}) == doctest::Approx(1e-3));
  CHECK_THROWS_AS(c_rule({}), InvalidTrainingSet);
}

TEST_CASE("first-layer C for the sine cascade is 10") {
  const Signal s = signals::generate_named("sin-2pi-x", 0, 2, 1001);
  CHECK(c_rule(s.y) == doctest::Approx(10.0).epsilon(0.01));
}

TEST_CASE("training rejects empty or malformed scale lists") {
  const std::vector<double> x{0, 1, 2, 3}, y{0, 1, 0, -1};
  CHECK_THROWS_AS(train(x, y, {}, 0.01), EmptyScales);
  CHECK_THROWS_AS(train(x, y, {0.5, 0.5}, 0.01), InvalidTrainingSet);
  CHECK_THROWS_AS(train(x, y, {0.5, 1.0}, 0.01), InvalidTrainingSet);
}

TEST_CASE("single-scale cascade on sin(2pi x) reaches the tube") {
  const Signal full = signals::generate_named("sin-2pi-x", 0, 2, 2001);
  const auto [tr, te] = signals::split_alternating(full);
  const ScaleEstimate est = fft_scales(tr);
  REQUIRE(est.scales.size() == 1);
  const double eps = epsilon_rule(tr.y);
  const TrainResult res = train(tr.x, tr.y, est.scales, eps);
  CHECK(res.model.layers.size() == 1);
  const auto errs = layerwise_errors(res.model, te.x, te.y);
  CHECK(errs.back() <= 0.03);
}

TEST_CASE("residual recursion telescopes to y - S(x)") {
  const Signal full = signals::generate_named("cos-2pi-x-plus-sin-20pi-x", 0, 2, 401);
  const auto [tr, te] = signals::split_alternating(full);
  const double eps = epsilon_rule(tr.y);
  const TrainResult res = train(tr.x, tr.y, {1.0 / 6.0, 1.0 / 60.0}, eps);
  REQUIRE(res.model.layers.size() == 2);

  const std::vector<double> pred = predict(res.model, tr.x);
  double max_dev = 0;
  for (std::size_t i = 0; i < tr.size(); ++i) {
    // reports carry the final residual max; recompute it from the model sum
    max_dev = std::max(max_dev, std::abs(tr.y[i] - pred[i]));
  }
  CHECK(max_dev == doctest::Approx(res.reports.back().residual_max).epsilon(1e-9));
}

TEST_CASE("cascade prediction is the sum of its layers") {
  const Signal full = signals::generate_named("cos-20pi-x-sin-15pi-x", 0, 2, 301);
  const auto [tr, te] = signals::split_alternating(full);
  const TrainResult res = train(tr.x, tr.y, {0.1, 0.02}, epsilon_rule(tr.y));
  for (double q : {0.1, 0.5, 1.3, 1.9}) {
    double manual = 0;
    for (const SvrModel& layer : res.model.layers) manual += predict_one(layer, q);
    const std::vector<double> full_pred = predict(res.model, {q});
    CHECK(full_pred[0] == doctest::Approx(manual).epsilon(1e-12));
  }
}

TEST_CASE("layer count equals the number of scales, no early stopping") {
  const Signal full = signals::generate_named("sin-2pi-x", 0, 2, 401);
  const auto [tr, te] = signals::split_alternating(full);
  const std::vector<double> scales{0.3, 0.1, 0.03, 0.01};
  const TrainResult res = train(tr.x, tr.y, scales, epsilon_rule(tr.y));
  CHECK(res.model.layers.size() == scales.size());
  CHECK(res.reports.size() == scales.size());
}

TEST_CASE("layerwise errors of truncated models match partial sums") {
  const Signal full = signals::generate_named("cos-2pi-x-plus-sin-20pi-x", 0, 2, 401);
  const auto [tr, te] = signals::split_alternating(full);
  const TrainResult res = train(tr.x, tr.y, {1.0 / 6.0, 1.0 / 60.0}, epsilon_rule(tr.y));
  const auto errs = layerwise_errors(res.model, te.x, te.y);
  REQUIRE(errs.size() == 2);

  // recompute S_i by evaluating truncated copies independently
  for (std::size_t depth = 1; depth <= 2; ++depth) {
    HsvrModel trunc;
    trunc.layers.assign(res.model.layers.begin(),
                        res.model.layers.begin() + static_cast<long>(depth));
    trunc.scales.assign(res.model.scales.begin(),
                        res.model.scales.begin() + static_cast<long>(depth));
    trunc.epsilon = res.model.epsilon;
    const std::vector<double> pred = predict(trunc, te.x);
    double e = 0;
    for (std::size_t i = 0; i < te.size(); ++i) e = std::max(e, std::abs(te.y[i] - pred[i]));
    CHECK(errs[depth - 1] == doctest::Approx(e).epsilon(1e-12));
  }
}

TEST_CASE("perfect model has zero layerwise error") {
  SvrModel flat;
  flat.bias = 2.0;
  HsvrModel model;
  model.layers = {flat};
  model.scales = {1.0};
  const auto errs = layerwise_errors(model, {0.0, 1.0}, {2.0, 2.0});
  CHECK(errs == std::vector<double>{0.0});
}

TEST_CASE("phase sweep produces an exact geometric scale sequence") {
  const Signal full = signals::generate_named("sin-2pi-x", 0, 2, 401);
  const auto [tr, te] = signals::split_alternating(full);
  const auto curve = phase_sweep(tr.x, tr.y, te.x, te.y, 1.0, 2.0, 6);
  REQUIRE(curve.size() == 6);
  for (std::size_t l = 1; l < curve.size(); ++l)
    CHECK(curve[l].first == doctest::Approx(curve[l - 1].first / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("phase sweep with one layer returns a single pair") {
  const Signal full = signals::generate_named("sin-2pi-x", 0, 2, 201);
  const auto [tr, te] = signals::split_alternating(full);
  const auto curve = phase_sweep(tr.x, tr.y, te.x, te.y, 0.5, 2.0, 1);
  CHECK(curve.size() == 1);
  CHECK(curve[0].first == doctest::Approx(0.5));
  CHECK(curve[0].second >= 0.0);
}

TEST_CASE("monotone signal stays below 2 epsilon at every sweep layer") {
  const std::size_t n = 801;
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    y[i] = x[i];
  }
  Signal full = make_signal(x, y);
  const auto [tr, te] = signals::split_alternating(full);
  const double eps = epsilon_rule(tr.y);
  const auto curve = phase_sweep(tr.x, tr.y, te.x, te.y, 1.0, 2.0, 5);
  for (const auto& [sigma, err] : curve) CHECK(err <= 2.0 * eps);
}

TEST_CASE("decay-2 cascade on x + sin(2pi x^4) shows a sharp error drop") {
  const Signal full = signals::generate_named("sin-2pi-x4-plus-x", 0, 2, 1201);
  const auto [tr, te] = signals::split_alternating(full);
  const auto curve = phase_sweep(tr.x, tr.y, te.x, te.y, 2.0, 2.0, 16);
  double best_ratio = 1e30;
  for (std::size_t l = 1; l < curve.size(); ++l)
    best_ratio = std::min(best_ratio, curve[l].second / curve[l - 1].second);
  CHECK(best_ratio <= 0.2);
}
