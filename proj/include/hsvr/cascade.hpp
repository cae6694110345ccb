#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hsvr/svr.hpp"

namespace hsvr {

/// A trained multiscale cascade: coarsest layer first, one kernel scale per
/// layer, all layers sharing the tube width used at training time.
struct HsvrModel {
  std::vector<SvrModel> layers;
  std::vector<double> scales;   // sigma per layer, strictly decreasing
  double epsilon = 0.0;
  double training_range = 0.0;  // max - min of the training targets
};

struct LayerReport {
  std::size_t layer_index = 0;
  double sigma = 0.0;
  double c_used = 0.0;
  std::size_t n_support = 0;
  double residual_max = 0.0;                 // max-abs training residual after this layer
  double residual_rms = 0.0;
  std::optional<double> test_error;          // max-abs test error of the partial sum
};

/// Tube width: one percent of the target range.
double epsilon_rule(const std::vector<double>& y);

/// Per-layer box bound: five times the residual range, with a small floor
/// when the residual is constant (the rule would give C = 0 there).
double c_rule(const std::vector<double>& residual);

struct TrainOptions {
  double kkt_tol = 1e-3;
  std::size_t max_passes = 0;        // 0 = solver default
  bool stop_below_epsilon = false;   // optional early stop, off by default
};

struct TrainResult {
  HsvrModel model;
  std::vector<LayerReport> reports;
};

/// Trains one SVR layer per scale on the running residual.
TrainResult train(const std::vector<double>& x, const std::vector<double>& y,
                  const std::vector<double>& scales, double epsilon,
                  const TrainOptions& options = {});

std::vector<double> predict(const HsvrModel& model, const std::vector<double>& x);

/// Max-abs test error of each partial sum S_1..S_L.
std::vector<double> layerwise_errors(const HsvrModel& model, const std::vector<double>& x_test,
                                     const std::vector<double>& y_test);

/// Trains a geometric-decay cascade sigma_l = sigma0 / sqrt(decay)^l and
/// returns the (sigma, test error) curve of the phase transition.
std::vector<std::pair<double, double>> phase_sweep(const std::vector<double>& x,
                                                   const std::vector<double>& y,
                                                   const std::vector<double>& x_test,
                                                   const std::vector<double>& y_test, double sigma0,
                                                   double decay, std::size_t n_layers);

}  // namespace hsvr
