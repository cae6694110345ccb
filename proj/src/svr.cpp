#include "hsvr/svr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hsvr/numerics.hpp"

namespace hsvr {

double gaussian_kernel(double x, double x_prime, double gamma) {
  const double d = x - x_prime;
  return std::exp(-gamma * d * d);
}

namespace {

constexpr double kTau = 1e-12;

// The dual is solved in 2n variables: t < n holds alpha_plus, t >= n holds
// alpha_minus, with label z_t = +1 / -1 and the single constraint
// sum z_t alpha_t = 0. Q_st = z_s z_t K(s mod n, t mod n).
struct SmoProblem {
  std::size_t n;
  const Eigen::MatrixXd& kernel;
  double c;
  double tol;
  std::size_t max_iter;

  double z(std::size_t t) const { return t < n ? 1.0 : -1.0; }
  double q(std::size_t s, std::size_t t) const {
    return z(s) * z(t) * kernel(static_cast<Eigen::Index>(s % n), static_cast<Eigen::Index>(t % n));
  }
};

bool smo_solve(const SmoProblem& prob, const std::vector<double>& p, std::vector<double>& alpha) {
  const std::size_t m = 2 * prob.n;
  std::vector<double> grad(p);  // alpha starts at zero

  for (std::size_t iter = 0; iter < prob.max_iter; ++iter) {
    // Maximal violating pair.
    double g_max = -std::numeric_limits<double>::infinity();
    double g_min = std::numeric_limits<double>::infinity();
    std::size_t i = m, j = m;
    for (std::size_t t = 0; t < m; ++t) {
      const double zt = prob.z(t);
      const bool in_up = (zt > 0) ? (alpha[t] < prob.c) : (alpha[t] > 0);
      const bool in_low = (zt > 0) ? (alpha[t] > 0) : (alpha[t] < prob.c);
      const double val = -zt * grad[t];
      if (in_up && val > g_max) {
        g_max = val;
        i = t;
      }
      if (in_low && val < g_min) {
        g_min = val;
        j = t;
      }
    }
    if (i == m || j == m || g_max - g_min <= prob.tol) return true;

    const double old_i = alpha[i];
    const double old_j = alpha[j];
    const double c = prob.c;

    if (prob.z(i) != prob.z(j)) {
      double quad = prob.q(i, i) + prob.q(j, j) + 2.0 * prob.q(i, j);
      if (quad <= 0) quad = kTau;
      const double delta = (-grad[i] - grad[j]) / quad;
      const double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0) {
        if (alpha[j] < 0) {
          alpha[j] = 0;
          alpha[i] = diff;
        }
      } else {
        if (alpha[i] < 0) {
          alpha[i] = 0;
          alpha[j] = -diff;
        }
      }
      if (diff > 0) {
        if (alpha[i] > c) {
          alpha[i] = c;
          alpha[j] = c - diff;
        }
      } else {
        if (alpha[j] > c) {
          alpha[j] = c;
          alpha[i] = c + diff;
        }
      }
    } else {
      double quad = prob.q(i, i) + prob.q(j, j) - 2.0 * prob.q(i, j);
      if (quad <= 0) quad = kTau;
      const double delta = (grad[i] - grad[j]) / quad;
      const double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > c) {
        if (alpha[i] > c) {
          alpha[i] = c;
          alpha[j] = sum - c;
        }
      } else {
        if (alpha[j] < 0) {
          alpha[j] = 0;
          alpha[i] = sum;
        }
      }
      if (sum > c) {
        if (alpha[j] > c) {
          alpha[j] = c;
          alpha[i] = sum - c;
        }
      } else {
        if (alpha[i] < 0) {
          alpha[i] = 0;
          alpha[j] = sum;
        }
      }
    }

    const double d_i = alpha[i] - old_i;
    const double d_j = alpha[j] - old_j;
    if (d_i == 0.0 && d_j == 0.0) return true;  // numerically stuck at optimum
    const double zi = prob.z(i), zj = prob.z(j);
    const std::size_t ki = i % prob.n, kj = j % prob.n;
    for (std::size_t t = 0; t < m; ++t) {
      const double kt_i = prob.kernel(static_cast<Eigen::Index>(t % prob.n),
                                      static_cast<Eigen::Index>(ki));
      const double kt_j = prob.kernel(static_cast<Eigen::Index>(t % prob.n),
                                      static_cast<Eigen::Index>(kj));
      grad[t] += prob.z(t) * (zi * d_i * kt_i + zj * d_j * kt_j);
    }
  }
  return false;
}

}  // namespace

SvrFitDetail fit_detailed(const std::vector<double>& x, const std::vector<double>& y,
                          const SvrConfig& config) {
  const std::size_t n = x.size();
  if (n == 0 || y.size() != n)
    throw InvalidTrainingSet("need equal-length non-empty x and y");
  for (std::size_t i = 0; i < n; ++i)
    if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
      throw InvalidTrainingSet("non-finite training sample");
  if (config.c <= 0 || config.epsilon < 0 || config.gamma <= 0 || config.kkt_tol <= 0)
    throw InvalidTrainingSet("invalid SvrConfig");

  Eigen::MatrixXd kernel(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = gaussian_kernel(x[i], x[j], config.gamma);
      kernel(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      kernel(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
    }

  std::vector<double> p(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = config.epsilon - y[i];
    p[i + n] = config.epsilon + y[i];
  }

  const std::size_t max_iter = config.max_passes ? config.max_passes : 10 * n;
  SmoProblem prob{n, kernel, config.c, config.kkt_tol, max_iter};
  std::vector<double> alpha(2 * n, 0.0);
  const bool converged = smo_solve(prob, p, alpha);

  std::vector<double> beta(n);
  for (std::size_t i = 0; i < n; ++i) beta[i] = alpha[i] - alpha[i + n];

  // g_i = sum_j beta_j K_ij, the prediction without bias.
  Eigen::Map<const Eigen::VectorXd> bv(beta.data(), static_cast<Eigen::Index>(n));
  Eigen::VectorXd g = kernel * bv;

  // Bias from the KKT conditions: free coefficients pin b exactly, averaged;
  // otherwise the midpoint of the interval all conditions allow.
  double bias = 0.0;
  std::size_t n_free = 0;
  const double free_margin = 1e-8 * config.c;
  for (std::size_t i = 0; i < n; ++i) {
    const double ab = std::abs(beta[i]);
    if (ab > free_margin && ab < config.c - free_margin) {
      const double sign = beta[i] > 0 ? 1.0 : -1.0;
      bias += y[i] - g(static_cast<Eigen::Index>(i)) - sign * config.epsilon;
      ++n_free;
    }
  }
  if (n_free > 0) {
    bias /= static_cast<double>(n_free);
  } else {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - g(static_cast<Eigen::Index>(i));
      if (std::abs(beta[i]) <= free_margin) {
        lo = std::max(lo, r - config.epsilon);
        hi = std::min(hi, r + config.epsilon);
      } else if (beta[i] > 0) {
        hi = std::min(hi, r - config.epsilon);
      } else {
        lo = std::max(lo, r + config.epsilon);
      }
    }
    if (lo > hi) std::swap(lo, hi);
    bias = std::isfinite(lo) && std::isfinite(hi) ? 0.5 * (lo + hi) : 0.0;
  }

  SvrFitDetail detail;
  detail.beta_full = beta;
  detail.dual_objective = numerics::svr_dual_objective(kernel, y, config.epsilon, beta);
  detail.model.gamma = config.gamma;
  detail.model.bias = bias;
  detail.model.converged = converged;
  const double drop = 1e-8 * config.c;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(beta[i]) > drop) {
      detail.model.support_x.push_back(x[i]);
      detail.model.beta.push_back(beta[i]);
    }
  }
  return detail;
}

SvrModel fit(const std::vector<double>& x, const std::vector<double>& y, const SvrConfig& config) {
  return fit_detailed(x, y, config).model;
}

double predict_one(const SvrModel& model, double x) {
  double acc = model.bias;
  for (std::size_t i = 0; i < model.support_x.size(); ++i)
    acc += model.beta[i] * gaussian_kernel(x, model.support_x[i], model.gamma);
  return acc;
}

std::vector<double> predict(const SvrModel& model, const std::vector<double>& x) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = predict_one(model, x[i]);
  return out;
}

}  // namespace hsvr
