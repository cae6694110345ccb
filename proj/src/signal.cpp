#include "hsvr/signal.hpp"

#include <cmath>

namespace hsvr {

double detect_spacing(const std::vector<double>& x, double rel_tol) {
  if (x.size() < 2) return 0.0;
  const double dx = x[1] - x[0];
  if (dx <= 0.0) return 0.0;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    if (std::abs(x[i + 1] - x[i] - dx) > rel_tol * dx) return 0.0;
  }
  return dx;
}

Signal make_signal(std::vector<double> x, std::vector<double> y) {
  if (x.size() != y.size()) throw InvalidSignal("x and y lengths differ");
  if (x.empty()) throw InvalidSignal("empty signal");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
      throw InvalidSignal("non-finite sample at index " + std::to_string(i));
    if (i > 0 && x[i] <= x[i - 1])
      throw InvalidSignal("x not strictly increasing at index " + std::to_string(i));
  }
  Signal s{std::move(x), std::move(y), 0.0};
  s.dx = detect_spacing(s.x);
  return s;
}

}  // namespace hsvr
