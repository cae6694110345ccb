#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hsvr/signals.hpp"

using namespace hsvr;
using namespace hsvr::signals;

TEST_CASE("registered functions evaluate their formulas") {
  const Signal s = generate_named("sin-2pi-x", 0, 2, 5);
  for (double v : s.y) CHECK(std::abs(v) < 1e-12);  // integer-period grid points

  const Signal p = generate_named("x-plus-x2-plus-x3", 0, 2, 3);
  CHECK(p.y[1] == doctest::Approx(3.0));  // x = 1

  const Signal m = generate_named("sin-2pi-x4-plus-x", 0, 2, 3);
  CHECK(m.y[0] == doctest::Approx(0.0));

  CHECK(function_registry().size() == 18);
  CHECK_THROWS_AS(generate_named("nope", 0, 1, 10), UnknownFunction);
}

TEST_CASE("generated grids are exactly equidistant in closed form") {
  const Signal s = generate_named("e-x", 0, 2, 2001);
  for (std::size_t i = 0; i < s.size(); ++i)
    CHECK(s.x[i] == 0.0 + static_cast<double>(i) * 2.0 / 2000.0);
  CHECK(s.dx > 0.0);
}

TEST_CASE("lorenz trajectory starts at its initial condition") {
  const auto traj = lorenz_trajectory(1.0, 11);
  CHECK(traj.x.y[0] == doctest::Approx(1.0));
  CHECK(traj.y.y[0] == doctest::Approx(1.0));
  CHECK(traj.z.y[0] == doctest::Approx(1.0));
  CHECK(traj.x.x[0] == doctest::Approx(0.0));
}

TEST_CASE("lorenz derivative at (1,1,1) shows through a small first step") {
  // rhs at (1,1,1) is (0, 26, 1 - 8/3); check the first sample against a
  // first-order expansion over one tiny sampling interval
  const double h = 1e-5;
  const auto traj = lorenz_trajectory(h, 2);
  // x'(0) = 0, so the forward difference is dominated by h/2 * x''(0) = 130 h
  CHECK(std::abs((traj.x.y[1] - 1.0) / h) <= 140.0 * h);
  CHECK((traj.y.y[1] - 1.0) / h == doctest::Approx(26.0).epsilon(1e-3));
  CHECK((traj.z.y[1] - 1.0) / h == doctest::Approx(1.0 - 8.0 / 3.0).epsilon(1e-3));
}

TEST_CASE("halving the internal step leaves sampled values nearly unchanged") {
  const auto coarse = lorenz_trajectory(2.0, 21, {}, 1e-3);
  const auto fine = lorenz_trajectory(2.0, 21, {}, 5e-4);
  double scale = 0.0;
  for (double v : coarse.x.y) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < coarse.x.size(); ++i)
    CHECK(std::abs(coarse.x.y[i] - fine.x.y[i]) <= 1e-6 * scale);
}

TEST_CASE("alternating split partitions and doubles the spacing") {
  const Signal full = generate_named("sin-2pi-x", 0, 2, 2001);
  const auto [tr, te] = split_alternating(full);
  CHECK(tr.size() == 1001);
  CHECK(te.size() == 1000);
  CHECK(tr.dx == doctest::Approx(2.0 * full.dx));

  // reassembling by x reproduces the original
  std::vector<double> merged_x;
  std::size_t a = 0, b = 0;
  while (a < tr.size() || b < te.size()) {
    if (b >= te.size() || (a < tr.size() && tr.x[a] < te.x[b]))
      merged_x.push_back(tr.x[a++]);
    else
      merged_x.push_back(te.x[b++]);
  }
  CHECK(merged_x == full.x);

  Signal tiny;
  tiny.x = {0, 1};
  tiny.y = {0, 0};
  CHECK_THROWS_AS(split_alternating(tiny), InvalidSignal);
}

TEST_CASE("csv round trip is bit exact") {
  Signal s;
  s.x = {0.1, 0.30000000000000004, 1.0 / 3.0, 12345.678901234567};
  s.y = {-1e-300, 2.2250738585072014e-308, 0.1 + 0.2, 9.87654321e12};
  s = make_signal(s.x, s.y);
  const std::string path = (std::filesystem::temp_directory_path() / "hsvr_roundtrip.csv").string();
  save_csv(s, path);
  const Signal back = load_csv(path);
  REQUIRE(back.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(back.x[i] == s.x[i]);
    CHECK(back.y[i] == s.y[i]);
  }
  std::remove(path.c_str());
}

TEST_CASE("csv loader reports the offending line") {
  const std::string path = (std::filesystem::temp_directory_path() / "hsvr_bad.csv").string();
  {
    std::ofstream out(path);
    out << "x,y\n0,1\n1,oops\n";
  }
  try {
    load_csv(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  {
    std::ofstream out(path);
    out << "x,y\n1,1\n0.5,2\n";  // x not increasing
  }
  CHECK_THROWS_AS(load_csv(path), InvalidSignal);
  std::remove(path.c_str());
}
