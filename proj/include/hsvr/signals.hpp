#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hsvr/signal.hpp"

namespace hsvr::signals {

struct NamedFunction {
  std::string slug;
  std::string formula;
  std::function<double(double)> eval;
};

/// Registry of the benchmark functions, keyed by kebab-case slug.
const std::vector<NamedFunction>& function_registry();

/// Samples a registered function on an equidistant grid over [a, b].
Signal generate_named(const std::string& slug, double a, double b, std::size_t n);

struct LorenzState {
  double x = 1.0;
  double y = 1.0;
  double z = 1.0;
  double t = 0.0;
};

struct LorenzTrajectory {
  Signal x;
  Signal y;
  Signal z;
};

/// Integrates the Lorenz system (sigma 10, rho 28, beta 8/3) with fixed-step
/// RK4 (internal step <= 1e-3) and samples n_points equidistant times on
/// [0, t_end].
LorenzTrajectory lorenz_trajectory(double t_end, std::size_t n_points,
                                   const LorenzState& initial = {}, double max_step = 1e-3);

/// Even-index samples go to the training set, odd-index to the test set.
std::pair<Signal, Signal> split_alternating(const Signal& signal);

Signal load_csv(const std::string& path);
void save_csv(const Signal& signal, const std::string& path);

}  // namespace hsvr::signals
