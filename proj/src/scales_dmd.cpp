#include "hsvr/scales_dmd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hsvr {

HankelPair build_hankel(const std::vector<double>& f, std::size_t m_rows) {
  const std::size_t n = f.size();
  if (n < 4) throw InvalidEmbedding("need at least 4 samples");
  if (m_rows <= n / 2 || m_rows > n - 2)
    throw InvalidEmbedding("rows must satisfy N/2 < M <= N-2");

  const std::size_t cols = n - m_rows + 1;
  HankelPair pair;
  pair.h.resize(static_cast<Eigen::Index>(m_rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < m_rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      pair.h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = f[i + j];
  pair.x = pair.h.leftCols(static_cast<Eigen::Index>(cols - 1));
  pair.y = pair.h.rightCols(static_cast<Eigen::Index>(cols - 1));
  return pair;
}

DmdSpectrum dmd_rrr(const numerics::Matrix& x, const numerics::Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || x.cols() < 2)
    throw InvalidMatrix("X and Y must share a shape with >= 2 columns");

  const numerics::SvdResult svd = numerics::svd(x);
  const double s_max = svd.singular_values.size() ? svd.singular_values(0) : 0.0;
  if (s_max <= 0.0) throw DegenerateData("X has rank 0");

  Eigen::Index rank = 0;
  while (rank < svd.singular_values.size() && svd.singular_values(rank) > 1e-10 * s_max) ++rank;

  const numerics::Matrix u = svd.u.leftCols(rank);
  const numerics::Matrix v = svd.v.leftCols(rank);
  const Eigen::VectorXd inv_s = svd.singular_values.head(rank).cwiseInverse();
  const numerics::Matrix b = y * v * inv_s.asDiagonal();  // Y V pinv(Sigma)
  const numerics::Matrix a_tilde = u.transpose() * b;

  const numerics::EigResult eig = numerics::eig(a_tilde.cast<std::complex<double>>());

  const double col_rms = y.norm() / std::sqrt(static_cast<double>(y.cols()));

  DmdSpectrum spec;
  spec.modes.resize(y.rows(), rank);
  const numerics::ComplexMatrix uc = u.cast<std::complex<double>>();
  const numerics::ComplexMatrix bc = b.cast<std::complex<double>>();
  for (Eigen::Index k = 0; k < rank; ++k) {
    const std::complex<double> lambda = eig.eigenvalues(k);
    const Eigen::VectorXcd w = eig.eigenvectors.col(k);
    Eigen::VectorXcd ritz = uc * w;
    const double rez = (bc * w - lambda * ritz).norm() / col_rms;
    const double nrm = ritz.norm();
    if (nrm > 0) ritz /= nrm;
    spec.ritz_values.push_back(lambda);
    spec.residuals.push_back(rez);
    spec.modes.col(k) = ritz;
  }
  return spec;
}

void mode_energies(DmdSpectrum& spectrum, const numerics::Matrix& y) {
  const Eigen::VectorXcd first = y.col(0).cast<std::complex<double>>();
  spectrum.energies.clear();
  spectrum.frequencies.clear();
  double power_sq = 0.0;
  for (Eigen::Index k = 0; k < spectrum.modes.cols(); ++k) {
    const double c = std::abs(spectrum.modes.col(k).dot(first));
    spectrum.energies.push_back(c);
    power_sq += c * c;
    const std::complex<double> lambda = spectrum.ritz_values[static_cast<std::size_t>(k)];
    spectrum.frequencies.push_back(std::arg(lambda) / (2.0 * std::numbers::pi));
  }
  spectrum.total_power = std::sqrt(power_sq);
}

ScaleEstimate dmd_scales(const std::vector<double>& f, double dx, const DmdOptions& options) {
  if (dx <= 0) throw InvalidSignal("dx must be positive");
  if (options.tol <= 0 || options.eta <= 0 || options.eta >= 1)
    throw InvalidSignal("need tol > 0 and eta in (0,1)");
  const std::size_t n = f.size();
  const std::size_t m_rows = options.m_rows ? options.m_rows : n / 2 + 1;

  const HankelPair pair = build_hankel(f, m_rows);
  DmdSpectrum spec = dmd_rrr(pair.x, pair.y);
  mode_energies(spec, pair.y);

  // Frequencies resolving less than one cycle over the record count as zero.
  const double omega_min = 1.0 / static_cast<double>(n);
  std::vector<double> supported;
  for (std::size_t k = 0; k < spec.frequencies.size(); ++k) {
    const double omega = std::abs(spec.frequencies[k]);
    if (spec.residuals[k] < options.tol && spec.energies[k] > options.eta * spec.total_power &&
        omega >= omega_min)
      supported.push_back(omega);
  }
  // Collapse conjugate pairs.
  std::sort(supported.begin(), supported.end());
  std::vector<double> unique_freqs;
  for (double w : supported) {
    if (unique_freqs.empty() || w - unique_freqs.back() > 1e-9) unique_freqs.push_back(w);
  }
  if (unique_freqs.empty())
    throw NoOscillatoryContent("DMD support contains no nonzero frequency");

  std::vector<double> raw_scales;
  for (double w : unique_freqs) raw_scales.push_back(dx / (6.0 * w));
  std::sort(raw_scales.begin(), raw_scales.end(), std::greater<>());

  ScaleEstimate est;
  est.method = ScaleMethod::DMD;
  est.decay = options.decay;
  est.coefficient_threshold = options.eta;
  est.scales = filter_scales(raw_scales, options.decay);
  for (double s : est.scales) est.support_frequencies.push_back(dx / (6.0 * s));
  return est;
}

ScaleEstimate dmd_scales(const Signal& signal, const DmdOptions& options) {
  if (signal.dx <= 0) throw NonUniformGrid("DMD needs a uniform grid");
  return dmd_scales(signal.y, signal.dx, options);
}

}  // namespace hsvr
