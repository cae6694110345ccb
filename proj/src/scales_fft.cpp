#include "hsvr/scales_fft.hpp"

#include <algorithm>
#include <cmath>

#include "hsvr/numerics.hpp"

namespace hsvr {

std::string to_string(ScaleMethod m) { return m == ScaleMethod::FFT ? "fft" : "dmd"; }

std::vector<double> filter_scales(const std::vector<double>& scales, double decay) {
  if (decay <= 1.0) throw InvalidSignal("filter_scales needs decay > 1");
  if (scales.empty()) return {};
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (scales[i] <= 0) throw InvalidSignal("scales must be positive");
    if (i > 0 && scales[i] > scales[i - 1])
      throw InvalidSignal("scales must be sorted descending");
  }
  std::vector<double> kept{scales[0]};
  for (std::size_t i = 1; i < scales.size(); ++i) {
    if (kept.back() / scales[i] >= decay) kept.push_back(scales[i]);
  }
  return kept;
}

ScaleEstimate fft_scales(const std::vector<double>& x, const std::vector<double>& y, double decay,
                         double threshold) {
  const std::size_t n = x.size();
  if (n < 4 || y.size() != n) throw InvalidSignal("fft_scales needs >= 4 paired samples");
  if (decay <= 1.0) throw InvalidSignal("decay must be > 1");
  if (threshold <= 0.0) throw InvalidSignal("threshold must be positive");
  const double dx = x[1] - x[0];
  if (dx <= 0) throw NonUniformGrid("x must be increasing");
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (std::abs(x[i + 1] - x[i] - dx) > 1e-6 * dx)
      throw NonUniformGrid("spacing deviates at index " + std::to_string(i));

  const numerics::ComplexVector coeff = numerics::dft(y);

  // One-sided spectrum. The DC bin takes part in the normalization maximum
  // but never in the support: the constant offset belongs to the SVR bias and
  // its frequency would map to an infinite scale.
  const std::size_t half = n / 2;
  double max_mag = 0.0;
  for (std::size_t k = 0; k <= half; ++k) max_mag = std::max(max_mag, std::abs(coeff[k]));
  if (max_mag <= 0.0) throw NoOscillatoryContent("signal has no spectral content");

  ScaleEstimate est;
  est.method = ScaleMethod::FFT;
  est.decay = decay;
  est.coefficient_threshold = threshold;

  std::vector<double> raw_scales;
  for (std::size_t k = 1; k <= half; ++k) {
    if (std::abs(coeff[k]) / max_mag > threshold) {
      const double nu = static_cast<double>(k) / static_cast<double>(n);
      raw_scales.push_back(dx / (6.0 * nu));
    }
  }
  if (raw_scales.empty())
    throw NoOscillatoryContent("no coefficient exceeds the support threshold");

  std::sort(raw_scales.begin(), raw_scales.end(), std::greater<>());
  est.scales = filter_scales(raw_scales, decay);
  for (double s : est.scales) est.support_frequencies.push_back(dx / (6.0 * s));
  return est;
}

ScaleEstimate fft_scales(const Signal& signal, double decay, double threshold) {
  return fft_scales(signal.x, signal.y, decay, threshold);
}

}  // namespace hsvr
