#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hsvr/signal.hpp"

namespace hsvr::numerics {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using Matrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

struct SvdResult {
  Matrix u;                            // column-orthonormal
  Eigen::VectorXd singular_values;     // non-increasing, non-negative
  Matrix v;                            // column-orthonormal
};

struct EigResult {
  Eigen::VectorXcd eigenvalues;
  ComplexMatrix eigenvectors;          // unit-norm columns
};

/// Discrete Fourier transform: entry k is sum_j y_j exp(-2*pi*i*j*k/n).
/// Radix-2 for power-of-two lengths, direct summation otherwise (exact
/// correctness matters here, not speed; inputs stay well below n = 4096).
ComplexVector dft(const std::vector<double>& y);

/// Inverse transform, for round-trip checks.
std::vector<double> idft(const ComplexVector& c);

/// One-sided per-sample frequency grid k/n for k = 0..floor(n/2).
/// Physical frequency of bin k is (k/n)/dx.
std::vector<double> dft_frequencies(std::size_t n, double dx);

SvdResult svd(const Matrix& a);

EigResult eig(const ComplexMatrix& a);

/// Brute-force maximizer of the epsilon-SVR dual, test oracle only.
/// Enumerates the 5^n activity patterns of beta = alpha_plus - alpha_minus
/// (zero, free positive, free negative, at +C, at -C), solves the reduced
/// KKT system for each, and returns the best feasible candidate.
struct QpOracleResult {
  std::vector<double> beta;   // alpha_plus - alpha_minus
  double objective;           // dual objective value at beta
};

QpOracleResult qp_oracle_svr(const Matrix& kernel, const std::vector<double>& y, double c_bound,
                             double epsilon);

/// Dual objective -1/2 b'Kb - eps*sum|b| + y'b evaluated at beta.
double svr_dual_objective(const Matrix& kernel, const std::vector<double>& y, double epsilon,
                          const std::vector<double>& beta);

}  // namespace hsvr::numerics
