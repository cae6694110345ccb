#include "hsvr/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hsvr {

double epsilon_rule(const std::vector<double>& y) {
  if (y.empty()) throw InvalidTrainingSet("epsilon_rule on empty targets");
  const auto [mn, mx] = std::minmax_element(y.begin(), y.end());
  return 0.01 * (*mx - *mn);
}

double c_rule(const std::vector<double>& residual) {
  if (residual.empty()) throw InvalidTrainingSet("c_rule on empty residual");
  const auto [mn, mx] = std::minmax_element(residual.begin(), residual.end());
  const double c = 5.0 * (*mx - *mn);
  return c > 0.0 ? c : 1e-3;  // constant residual would make the dual trivial
}

TrainResult train(const std::vector<double>& x, const std::vector<double>& y,
                  const std::vector<double>& scales, double epsilon,
                  const TrainOptions& options) {
  if (scales.empty()) throw EmptyScales("no scales to train");
  if (x.size() != y.size() || x.empty()) throw InvalidTrainingSet("bad training set");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (scales[i] <= 0) throw InvalidTrainingSet("scales must be positive");
    if (i > 0 && scales[i] >= scales[i - 1])
      throw InvalidTrainingSet("scales must be strictly decreasing");
  }
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] <= x[i - 1]) throw InvalidTrainingSet("x must be strictly increasing");

  TrainResult result;
  const auto [mn, mx] = std::minmax_element(y.begin(), y.end());
  result.model.epsilon = epsilon;
  result.model.training_range = *mx - *mn;

  std::vector<double> residual = y;
  for (std::size_t layer = 0; layer < scales.size(); ++layer) {
    const double sigma = scales[layer];
    SvrConfig cfg;
    cfg.c = c_rule(residual);
    cfg.epsilon = epsilon;
    cfg.gamma = 1.0 / (sigma * sigma);
    cfg.kkt_tol = options.kkt_tol;
    cfg.max_passes = options.max_passes;

    SvrModel svr;
    try {
      svr = fit(x, residual, cfg);
    } catch (const std::exception& e) {
      throw InvalidTrainingSet("layer " + std::to_string(layer) + ": " + e.what());
    }

    const std::vector<double> pred = predict(svr, x);
    double res_max = 0.0, res_sq = 0.0;
    for (std::size_t i = 0; i < residual.size(); ++i) {
      residual[i] -= pred[i];
      res_max = std::max(res_max, std::abs(residual[i]));
      res_sq += residual[i] * residual[i];
    }

    LayerReport report;
    report.layer_index = layer;
    report.sigma = sigma;
    report.c_used = cfg.c;
    report.n_support = svr.support_x.size();
    report.residual_max = res_max;
    report.residual_rms = std::sqrt(res_sq / static_cast<double>(residual.size()));

    result.model.layers.push_back(std::move(svr));
    result.model.scales.push_back(sigma);
    result.reports.push_back(report);

    if (options.stop_below_epsilon && res_max <= epsilon) break;
  }
  return result;
}

std::vector<double> predict(const HsvrModel& model, const std::vector<double>& x) {
  std::vector<double> out(x.size(), 0.0);
  for (const SvrModel& layer : model.layers) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += predict_one(layer, x[i]);
  }
  return out;
}

std::vector<double> layerwise_errors(const HsvrModel& model, const std::vector<double>& x_test,
                                     const std::vector<double>& y_test) {
  if (x_test.empty() || x_test.size() != y_test.size())
    throw InvalidTrainingSet("bad test set");
  std::vector<double> partial(x_test.size(), 0.0);
  std::vector<double> errors;
  errors.reserve(model.layers.size());
  for (const SvrModel& layer : model.layers) {
    double err = 0.0;
    for (std::size_t i = 0; i < x_test.size(); ++i) {
      partial[i] += predict_one(layer, x_test[i]);
      err = std::max(err, std::abs(y_test[i] - partial[i]));
    }
    errors.push_back(err);
  }
  return errors;
}

std::vector<std::pair<double, double>> phase_sweep(const std::vector<double>& x,
                                                   const std::vector<double>& y,
                                                   const std::vector<double>& x_test,
                                                   const std::vector<double>& y_test, double sigma0,
                                                   double decay, std::size_t n_layers) {
  if (sigma0 <= 0 || decay <= 1.0 || n_layers == 0)
    throw InvalidTrainingSet("phase_sweep needs sigma0 > 0, decay > 1, n_layers >= 1");
  std::vector<double> scales(n_layers);
  const double ratio = 1.0 / std::sqrt(decay);
  for (std::size_t l = 0; l < n_layers; ++l) scales[l] = sigma0 * std::pow(ratio, l);

  const double epsilon = epsilon_rule(y);
  TrainResult tr = train(x, y, scales, epsilon);
  const std::vector<double> errors = layerwise_errors(tr.model, x_test, y_test);

  std::vector<std::pair<double, double>> curve(n_layers);
  for (std::size_t l = 0; l < n_layers; ++l) curve[l] = {scales[l], errors[l]};
  return curve;
}

}  // namespace hsvr
