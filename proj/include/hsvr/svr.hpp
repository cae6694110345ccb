#pragma once

#include <cstddef>
#include <vector>

#include "hsvr/signal.hpp"

namespace hsvr {

struct SvrConfig {
  double c = 1.0;            // box bound on the dual variables
  double epsilon = 0.1;      // half-width of the insensitive tube
  double gamma = 1.0;        // kernel scale, gamma = 1/sigma^2
  double kkt_tol = 1e-3;     // working-set stopping tolerance
  std::size_t max_passes = 0;  // iteration cap, 0 means 10*n
};

/// One trained SVR layer: a Gaussian kernel expansion over its support
/// vectors plus a bias. Immutable after fit.
struct SvrModel {
  std::vector<double> support_x;
  std::vector<double> beta;   // alpha_plus - alpha_minus, all nonzero
  double bias = 0.0;
  double gamma = 1.0;
  bool converged = true;      // false when max_passes was hit first
};

double gaussian_kernel(double x, double x_prime, double gamma);

/// Trains epsilon-SVR by SMO with maximal-violating-pair selection on the
/// 2n-variable dual. Non-convergence is reported via SvrModel::converged,
/// not an exception.
SvrModel fit(const std::vector<double>& x, const std::vector<double>& y, const SvrConfig& config);

double predict_one(const SvrModel& model, double x);
std::vector<double> predict(const SvrModel& model, const std::vector<double>& x);

/// Full dual solution of a fit, for KKT and objective checks.
struct SvrFitDetail {
  SvrModel model;
  std::vector<double> beta_full;  // per training point, including zeros
  double dual_objective = 0.0;
};

SvrFitDetail fit_detailed(const std::vector<double>& x, const std::vector<double>& y,
                          const SvrConfig& config);

}  // namespace hsvr
