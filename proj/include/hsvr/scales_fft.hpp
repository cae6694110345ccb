#pragma once

#include <string>
#include <vector>

#include "hsvr/signal.hpp"

namespace hsvr {

enum class ScaleMethod { FFT, DMD };

std::string to_string(ScaleMethod m);

/// Kernel scales derived from a signal's frequency support, descending, with
/// consecutive ratios at least `decay`. Each scale is dx/(6*frequency) for a
/// retained per-sample frequency.
struct ScaleEstimate {
  ScaleMethod method = ScaleMethod::FFT;
  std::vector<double> scales;
  std::vector<double> support_frequencies;  // per-sample, parallel to scales
  double coefficient_threshold = 0.01;
  double decay = 2.0;
};

/// Greedy geometric filter: keep the first scale, then each candidate only if
/// (last kept)/candidate >= decay.
std::vector<double> filter_scales(const std::vector<double>& scales, double decay);

/// Scale estimation from the one-sided DFT support. The DC bin is excluded
/// from both the normalization maximum and the support; magnitudes are
/// normalized by their maximum and frequencies above `threshold` are kept.
ScaleEstimate fft_scales(const std::vector<double>& x, const std::vector<double>& y,
                         double decay = 2.0, double threshold = 0.01);

ScaleEstimate fft_scales(const Signal& signal, double decay = 2.0, double threshold = 0.01);

}  // namespace hsvr
