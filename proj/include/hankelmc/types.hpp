#ifndef HANKELMC_TYPES_HPP
#define HANKELMC_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace hankelmc {

using Cx = std::complex<double>;
using Index = Eigen::Index;
using CxMatrix = Eigen::MatrixXcd;
using CxVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Number of cells on each anti-diagonal of an n1 x n2 matrix.
/// w[t] = #{(k1,k2) : k1+k2 = t+2, 0 <= k1 < n1, 0 <= k2 < n2} for t = 0..n-1
/// (1-based: k1+k2 = t+1). The values are integers stored as doubles since
/// they are only ever used as averaging weights.
RealVector anti_diag_weights(Index n1, Index n2);

/// Shape of the block-Hankel lift of an n_c x n signal: the lifted matrix is
/// (n_c*n1) x n2 with n1 + n2 = n + 1. Row (k1-1)*n_c + k of the lift holds
/// channel k of time sample k1 + k2 - 1 in column k2 (1-based).
struct HankelGeometry {
  Index n_c = 0;
  Index n = 0;
  Index n1 = 0;
  Index n2 = 0;
  RealVector weights;  // anti-diagonal cell counts, length n

  HankelGeometry() = default;
  HankelGeometry(Index n_c_, Index n_, Index n1_)
      : n_c(n_c_), n(n_), n1(n1_), n2(n_ + 1 - n1_) {
    if (n_c < 1 || n < 1 || n1 < 1 || n1 > n) {
      throw std::invalid_argument("HankelGeometry: need n_c >= 1 and 1 <= n1 <= n");
    }
    weights = anti_diag_weights(n1, n2);
  }

  Index rows() const { return n_c * n1; }
  Index cols() const { return n2; }
};

/// Sum-of-damped-sinusoids parameters: channel k, time t (t = 1..n) is
/// sum_i amp(k,i) * exp((2*pi*i*freq[i] - damp[i]) * t).
struct SpectralParams {
  RealVector freq;  // r frequencies in (0,1)
  RealVector damp;  // r dampings >= 0
  CxMatrix amp;     // n_c x r complex amplitudes

  Index modes() const { return freq.size(); }
};

/// An n_c x n complex data matrix, optionally carrying the generator
/// parameters it was synthesized from.
struct MultiChannelSignal {
  CxMatrix data;
  std::optional<SpectralParams> params;
  std::uint64_t seed = 0;

  Index channels() const { return data.rows(); }
  Index samples() const { return data.cols(); }
};

/// Evaluate the spectral model on a fresh matrix.
CxMatrix evaluate_spectral(const SpectralParams& params, Index n_c, Index n);

/// Thin SVD triple of a (block-)Hankel matrix. U is (n_c*n1) x r with
/// orthonormal columns, V is n2 x r, S holds positive singular values in
/// nonincreasing order.
struct RankRFactors {
  CxMatrix U;
  RealVector S;
  CxMatrix V;

  Index rank() const { return S.size(); }
  bool empty() const { return S.size() == 0; }
  CxMatrix dense() const {
    if (empty()) return CxMatrix::Zero(U.rows(), V.rows());
    return U * S.asDiagonal() * V.adjoint();
  }
};

/// How singular value decompositions of large structured matrices are
/// computed. Auto picks the dense path when the matrix has at most 2^20
/// entries and Lanczos bidiagonalization otherwise.
enum class SvdPolicy { Auto, Dense, Lanczos };

inline constexpr Index kDenseSvdMaxElements = Index(1) << 20;

}  // namespace hankelmc

#endif
