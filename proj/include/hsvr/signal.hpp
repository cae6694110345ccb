#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hsvr {

// Errors carry the name of the violated contract; the CLI maps them to exit codes.
struct InvalidSignal : std::runtime_error {
  explicit InvalidSignal(const std::string& msg) : std::runtime_error("InvalidSignal: " + msg) {}
};
struct InvalidMatrix : std::runtime_error {
  explicit InvalidMatrix(const std::string& msg) : std::runtime_error("InvalidMatrix: " + msg) {}
};
struct OracleTooLarge : std::runtime_error {
  explicit OracleTooLarge(const std::string& msg) : std::runtime_error("OracleTooLarge: " + msg) {}
};
struct InvalidTrainingSet : std::runtime_error {
  explicit InvalidTrainingSet(const std::string& msg)
      : std::runtime_error("InvalidTrainingSet: " + msg) {}
};
struct EmptyScales : std::runtime_error {
  explicit EmptyScales(const std::string& msg) : std::runtime_error("EmptyScales: " + msg) {}
};
struct NonUniformGrid : std::runtime_error {
  explicit NonUniformGrid(const std::string& msg) : std::runtime_error("NonUniformGrid: " + msg) {}
};
struct NoOscillatoryContent : std::runtime_error {
  explicit NoOscillatoryContent(const std::string& msg)
      : std::runtime_error("NoOscillatoryContent: " + msg) {}
};
struct InvalidEmbedding : std::runtime_error {
  explicit InvalidEmbedding(const std::string& msg)
      : std::runtime_error("InvalidEmbedding: " + msg) {}
};
struct DegenerateData : std::runtime_error {
  explicit DegenerateData(const std::string& msg) : std::runtime_error("DegenerateData: " + msg) {}
};
struct UnknownFunction : std::runtime_error {
  explicit UnknownFunction(const std::string& msg)
      : std::runtime_error("UnknownFunction: " + msg) {}
};
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error("ParseError: " + msg) {}
};

/// An ordered, sampled 1-D signal. dx is the uniform spacing, or 0 when the
/// grid is not uniform.
struct Signal {
  std::vector<double> x;
  std::vector<double> y;
  double dx = 0.0;

  std::size_t size() const { return x.size(); }
};

/// Detects a uniform grid and returns its spacing, or 0 for non-uniform grids.
/// Tolerance is 1e-9 relative to the first spacing.
double detect_spacing(const std::vector<double>& x, double rel_tol = 1e-9);

/// Builds a Signal from parallel vectors, validating ordering and finiteness.
Signal make_signal(std::vector<double> x, std::vector<double> y);

}  // namespace hsvr
