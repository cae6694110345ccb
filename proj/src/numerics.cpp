#include "hsvr/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>

namespace hsvr::numerics {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey, in place, sign = -1 forward / +1 inverse.
void fft_pow2(ComplexVector& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * kTwoPi / static_cast<double>(len);
    const Complex wl = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      Complex w{1.0, 0.0};
      for (std::size_t k = 0; k < len / 2; ++k) {
        Complex u = a[i + k];
        Complex v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

ComplexVector transform(const ComplexVector& in, int sign) {
  const std::size_t n = in.size();
  if (is_pow2(n)) {
    ComplexVector a = in;
    fft_pow2(a, sign);
    return a;
  }
  // Direct summation with a precomputed twiddle table, indexed mod n.
  std::vector<Complex> tw(n);
  for (std::size_t m = 0; m < n; ++m)
    tw[m] = std::polar(1.0, sign * kTwoPi * static_cast<double>(m) / static_cast<double>(n));
  ComplexVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    std::size_t idx = 0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += in[j] * tw[idx];
      idx += k;
      if (idx >= n) idx -= n;
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace

ComplexVector dft(const std::vector<double>& y) {
  if (y.size() < 2) throw InvalidSignal("dft needs at least 2 samples");
  for (double v : y)
    if (!std::isfinite(v)) throw InvalidSignal("dft input has non-finite entry");
  ComplexVector in(y.begin(), y.end());
  return transform(in, -1);
}

std::vector<double> idft(const ComplexVector& c) {
  if (c.empty()) throw InvalidSignal("idft of empty vector");
  ComplexVector out = transform(c, +1);
  std::vector<double> y(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) y[i] = out[i].real() / static_cast<double>(c.size());
  return y;
}

std::vector<double> dft_frequencies(std::size_t n, double dx) {
  if (n < 2) throw InvalidSignal("frequency grid needs n >= 2");
  if (dx <= 0.0) throw InvalidSignal("dx must be positive");
  std::vector<double> freq(n / 2 + 1);
  for (std::size_t k = 0; k < freq.size(); ++k)
    freq[k] = static_cast<double>(k) / static_cast<double>(n);
  return freq;
}

SvdResult svd(const Matrix& a) {
  if (a.size() == 0) throw InvalidMatrix("svd of empty matrix");
  if (!a.allFinite()) throw InvalidMatrix("svd input has non-finite entry");
  Eigen::BDCSVD<Matrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return SvdResult{solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

EigResult eig(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidMatrix("eig input is not square");
  if (!a.allFinite()) throw InvalidMatrix("eig input has non-finite entry");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) throw InvalidMatrix("eigendecomposition failed");
  EigResult r{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index j = 0; j < r.eigenvectors.cols(); ++j) {
    const double nrm = r.eigenvectors.col(j).norm();
    if (nrm > 0) r.eigenvectors.col(j) /= nrm;
  }
  return r;
}

double svr_dual_objective(const Matrix& kernel, const std::vector<double>& y, double epsilon,
                          const std::vector<double>& beta) {
  const auto n = static_cast<Eigen::Index>(beta.size());
  Eigen::Map<const Eigen::VectorXd> b(beta.data(), n);
  Eigen::Map<const Eigen::VectorXd> yv(y.data(), n);
  return -0.5 * b.dot(kernel * b) - epsilon * b.cwiseAbs().sum() + yv.dot(b);
}

QpOracleResult qp_oracle_svr(const Matrix& kernel, const std::vector<double>& y, double c_bound,
                             double epsilon) {
  const std::size_t n = y.size();
  if (n > 6) throw OracleTooLarge("qp_oracle_svr limited to n <= 6");
  if (static_cast<std::size_t>(kernel.rows()) != n ||
      static_cast<std::size_t>(kernel.cols()) != n)
    throw InvalidMatrix("kernel matrix shape mismatch");

  // States per coordinate: 0 = zero, 1 = free positive, 2 = free negative,
  // 3 = clamped +C, 4 = clamped -C.
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 5;

  const double slack = 1e-10 * std::max(1.0, c_bound);
  QpOracleResult best;
  best.beta.assign(n, 0.0);
  best.objective = -std::numeric_limits<double>::infinity();

  std::vector<int> state(n);
  std::vector<std::size_t> free_idx;
  std::vector<double> beta(n);

  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      state[i] = static_cast<int>(c % 5);
      c /= 5;
    }

    free_idx.clear();
    double bound_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      switch (state[i]) {
        case 0: beta[i] = 0.0; break;
        case 3: beta[i] = c_bound; bound_sum += c_bound; break;
        case 4: beta[i] = -c_bound; bound_sum -= c_bound; break;
        default: free_idx.push_back(i); break;
      }
    }

    if (free_idx.empty()) {
      if (std::abs(bound_sum) > slack) continue;
    } else {
      // Stationarity over free coordinates with the equality multiplier:
      //   [K_FF 1; 1' 0] [beta_F; mu] = [y_F - eps*s_F - K_FB beta_B; -sum(beta_B)]
      const auto m = static_cast<Eigen::Index>(free_idx.size());
      Eigen::MatrixXd sys(m + 1, m + 1);
      Eigen::VectorXd rhs(m + 1);
      sys.setZero();
      for (Eigen::Index a = 0; a < m; ++a) {
        const std::size_t ia = free_idx[static_cast<std::size_t>(a)];
        const double sign = (state[ia] == 1) ? 1.0 : -1.0;
        double fixed = 0.0;
        for (std::size_t j = 0; j < n; ++j)
          if (state[j] == 3 || state[j] == 4) fixed += kernel(ia, j) * beta[j];
        rhs(a) = y[ia] - epsilon * sign - fixed;
        for (Eigen::Index bcol = 0; bcol < m; ++bcol)
          sys(a, bcol) = kernel(ia, free_idx[static_cast<std::size_t>(bcol)]);
        sys(a, m) = 1.0;
        sys(m, a) = 1.0;
      }
      rhs(m) = -bound_sum;

      Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
      Eigen::VectorXd sol = lu.solve(rhs);
      if ((sys * sol - rhs).norm() > 1e-8 * (1.0 + rhs.norm())) continue;

      bool ok = true;
      for (Eigen::Index a = 0; a < m && ok; ++a) {
        const std::size_t ia = free_idx[static_cast<std::size_t>(a)];
        const double sign = (state[ia] == 1) ? 1.0 : -1.0;
        const double v = sol(a);
        if (sign * v < -slack || std::abs(v) > c_bound + slack) ok = false;
        beta[ia] = v;
      }
      if (!ok) continue;
    }

    const double obj = svr_dual_objective(kernel, y, epsilon, beta);
    if (obj > best.objective) {
      best.objective = obj;
      best.beta = beta;
    }
  }
  return best;
}

}  // namespace hsvr::numerics
