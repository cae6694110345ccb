#include "hsvr/signals.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace hsvr::signals {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> equidistant_grid(double a, double b, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = a + static_cast<double>(i) * (b - a) / static_cast<double>(n - 1);
  return x;
}

}  // namespace

const std::vector<NamedFunction>& function_registry() {
  static const std::vector<NamedFunction> registry = {
      {"sin-2pi-x", "sin(2*pi*x)", [](double x) { return std::sin(2 * kPi * x); }},
      {"sin-20pi-x", "sin(20*pi*x)", [](double x) { return std::sin(20 * kPi * x); }},
      {"sin-200pi-x", "sin(200*pi*x)", [](double x) { return std::sin(200 * kPi * x); }},
      {"100sin-20pi-x", "100*sin(20*pi*x)",
       [](double x) { return 100.0 * std::sin(20 * kPi * x); }},
      {"40cos-2pi-x", "40*cos(2*pi*x)", [](double x) { return 40.0 * std::cos(2 * kPi * x); }},
      {"100cos-20pi-x", "100*cos(20*pi*x)",
       [](double x) { return 100.0 * std::cos(20 * kPi * x); }},
      {"sin-2pi-x2", "sin(2*pi*x^2)", [](double x) { return std::sin(2 * kPi * x * x); }},
      {"x-plus-x2-plus-x3", "x + x^2 + x^3", [](double x) { return x + x * x + x * x * x; }},
      {"e-x", "exp(x)", [](double x) { return std::exp(x); }},
      {"sin-2pi-x4-plus-x", "x + sin(2*pi*x^4)",
       [](double x) { return x + std::sin(2 * kPi * x * x * x * x); }},
      {"cos-2pi-x-plus-sin-20pi-x", "cos(2*pi*x) + sin(20*pi*x)",
       [](double x) { return std::cos(2 * kPi * x) + std::sin(20 * kPi * x); }},
      {"cos-20pi-x-sin-15pi-x", "cos(20*pi*x)*sin(15*pi*x)",
       [](double x) { return std::cos(20 * kPi * x) * std::sin(15 * kPi * x); }},
      {"cos-32pi-x-cubed", "cos(32*pi*x)^3",
       [](double x) { return std::pow(std::cos(32 * kPi * x), 3); }},
      {"sin-13-17-19-23pi-x", "sin(13*pi*x) + sin(17*pi*x) + sin(19*pi*x) + sin(23*pi*x)",
       [](double x) {
         return std::sin(13 * kPi * x) + std::sin(17 * kPi * x) + std::sin(19 * kPi * x) +
                std::sin(23 * kPi * x);
       }},
      {"sin-50pi-x-sin-20pi-x-cos-15pi-x", "sin(50*pi*x)*sin(20*pi*x)*cos(15*pi*x)",
       [](double x) {
         return std::sin(50 * kPi * x) * std::sin(20 * kPi * x) * std::cos(15 * kPi * x);
       }},
      {"sin-40pi-x-cos-10pi-x-plus-3sin-20x-sin-40x",
       "sin(40*pi*x)*cos(10*pi*x) + 3*sin(20*x)*sin(40*x)",
       [](double x) {
         return std::sin(40 * kPi * x) * std::cos(10 * kPi * x) +
                3.0 * std::sin(20 * x) * std::sin(40 * x);
       }},
      {"sin-2x-cos-32x", "sin(2*x)*cos(32*x)",
       [](double x) { return std::sin(2 * x) * std::cos(32 * x); }},
      {"sin-20pi-x2", "sin(20*pi*x^2)", [](double x) { return std::sin(20 * kPi * x * x); }},
  };
  return registry;
}

Signal generate_named(const std::string& slug, double a, double b, std::size_t n) {
  if (n < 2 || a >= b) throw InvalidSignal("need n >= 2 and a < b");
  for (const NamedFunction& fn : function_registry()) {
    if (fn.slug == slug) {
      std::vector<double> x = equidistant_grid(a, b, n);
      std::vector<double> y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = fn.eval(x[i]);
      return make_signal(std::move(x), std::move(y));
    }
  }
  throw UnknownFunction("no registered function named '" + slug + "'");
}

namespace {

std::array<double, 3> lorenz_rhs(const std::array<double, 3>& s) {
  return {10.0 * (s[1] - s[0]), s[0] * (28.0 - s[2]) - s[1], s[0] * s[1] - (8.0 / 3.0) * s[2]};
}

void rk4_step(std::array<double, 3>& s, double h) {
  const auto k1 = lorenz_rhs(s);
  std::array<double, 3> tmp;
  for (int i = 0; i < 3; ++i) tmp[i] = s[i] + 0.5 * h * k1[i];
  const auto k2 = lorenz_rhs(tmp);
  for (int i = 0; i < 3; ++i) tmp[i] = s[i] + 0.5 * h * k2[i];
  const auto k3 = lorenz_rhs(tmp);
  for (int i = 0; i < 3; ++i) tmp[i] = s[i] + h * k3[i];
  const auto k4 = lorenz_rhs(tmp);
  for (int i = 0; i < 3; ++i) s[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
}

}  // namespace

LorenzTrajectory lorenz_trajectory(double t_end, std::size_t n_points,
                                   const LorenzState& initial, double max_step) {
  if (t_end <= 0 || n_points < 2) throw InvalidSignal("need t_end > 0 and n_points >= 2");
  if (max_step <= 0) throw InvalidSignal("need max_step > 0");

  std::array<double, 3> state{initial.x, initial.y, initial.z};
  const double sample_dt = t_end / static_cast<double>(n_points - 1);
  const auto substeps = static_cast<std::size_t>(std::ceil(sample_dt / max_step));
  const double h = sample_dt / static_cast<double>(substeps);

  std::vector<double> t(n_points), xs(n_points), ys(n_points), zs(n_points);
  for (std::size_t k = 0; k < n_points; ++k) {
    t[k] = initial.t + static_cast<double>(k) * sample_dt;
    xs[k] = state[0];
    ys[k] = state[1];
    zs[k] = state[2];
    if (k + 1 < n_points)
      for (std::size_t s = 0; s < substeps; ++s) rk4_step(state, h);
  }
  return LorenzTrajectory{make_signal(t, std::move(xs)), make_signal(t, std::move(ys)),
                          make_signal(std::move(t), std::move(zs))};
}

std::pair<Signal, Signal> split_alternating(const Signal& signal) {
  if (signal.size() < 4) throw InvalidSignal("split needs at least 4 samples");
  std::vector<double> xt, yt, xv, yv;
  for (std::size_t i = 0; i < signal.size(); ++i) {
    if (i % 2 == 0) {
      xt.push_back(signal.x[i]);
      yt.push_back(signal.y[i]);
    } else {
      xv.push_back(signal.x[i]);
      yv.push_back(signal.y[i]);
    }
  }
  return {make_signal(std::move(xt), std::move(yt)), make_signal(std::move(xv), std::move(yv))};
}

Signal load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string line;
  std::size_t line_no = 0;
  std::vector<double> x, y;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || (line_no == 1 && line.rfind("x,y", 0) == 0)) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'x,y' pair");
    char* end = nullptr;
    const std::string xs = line.substr(0, comma);
    const std::string ys = line.substr(comma + 1);
    const double xv = std::strtod(xs.c_str(), &end);
    if (end == xs.c_str() || *end != '\0')
      throw ParseError("line " + std::to_string(line_no) + ": bad x value '" + xs + "'");
    const double yv = std::strtod(ys.c_str(), &end);
    if (end == ys.c_str() || *end != '\0')
      throw ParseError("line " + std::to_string(line_no) + ": bad y value '" + ys + "'");
    x.push_back(xv);
    y.push_back(yv);
  }
  if (x.empty()) throw ParseError("'" + path + "' holds no samples");
  return make_signal(std::move(x), std::move(y));
}

void save_csv(const Signal& signal, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << "x,y\n";
  char buf[64];
  for (std::size_t i = 0; i < signal.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", signal.x[i], signal.y[i]);
    out << buf;
  }
}

}  // namespace hsvr::signals
