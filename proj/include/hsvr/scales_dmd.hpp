#pragma once

#include <complex>
#include <vector>

#include "hsvr/numerics.hpp"
#include "hsvr/scales_fft.hpp"

namespace hsvr {

/// Delay-embedding of a scalar signal: H has M rows and N-M+1 columns with
/// H(i,j) = f[i+j]; X and Y are the leading and trailing N-M columns.
struct HankelPair {
  numerics::Matrix h;
  numerics::Matrix x;
  numerics::Matrix y;
};

/// Ritz pairs of the compressed operator U* Y V pinv(Sigma), with
/// data-consistency residuals, mode energies against the first data column,
/// and per-sample frequencies from the unit-circle projection of the
/// eigenvalues.
struct DmdSpectrum {
  std::vector<std::complex<double>> ritz_values;
  std::vector<double> residuals;   // relative to the RMS column norm of Y
  numerics::ComplexMatrix modes;   // unit-norm columns, one per Ritz value
  std::vector<double> energies;
  double total_power = 0.0;
  std::vector<double> frequencies;  // arg(lambda)/(2*pi), in (-0.5, 0.5]
};

HankelPair build_hankel(const std::vector<double>& f, std::size_t m_rows);

/// Residual-filtered DMD: SVD of X with rank truncation at 1e-10 * s_max,
/// eigendecomposition of the compressed operator, Ritz vectors U*w and
/// residuals ||Y V pinv(Sigma) w - lambda U w||.
DmdSpectrum dmd_rrr(const numerics::Matrix& x, const numerics::Matrix& y);

/// Fills in energies, total power, and frequencies for a computed spectrum.
void mode_energies(DmdSpectrum& spectrum, const numerics::Matrix& y);

struct DmdOptions {
  std::size_t m_rows = 0;     // 0 = floor(N/2)+1
  double tol = 1e-2;          // residual cutoff for the frequency support
  double eta = 0.02;          // energy cutoff as a fraction of total power
  double decay = 2.0;
};

/// End-to-end scale estimation from a uniformly sampled signal via Hankel DMD.
ScaleEstimate dmd_scales(const std::vector<double>& f, double dx, const DmdOptions& options = {});

ScaleEstimate dmd_scales(const Signal& signal, const DmdOptions& options = {});

}  // namespace hsvr
