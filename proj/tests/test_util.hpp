#ifndef HANKELMC_TEST_UTIL_HPP
#define HANKELMC_TEST_UTIL_HPP

#include "hankelmc/types.hpp"

#include <random>

namespace hankelmc::testutil {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline CxMatrix random_complex(Index rows, Index cols, std::mt19937_64& gen) {
  std::normal_distribution<double> g(0.0, 1.0);
  CxMatrix M(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) M(i, j) = Cx(g(gen), g(gen));
  }
  return M;
}

inline CxVector random_complex_vector(Index n, std::mt19937_64& gen) {
  return random_complex(n, 1, gen).col(0);
}

// Brute-force block-Hankel lift, written independently of the library path:
// entry ((k1-1)*n_c + k, k2) = X(k, k1 + k2 - 1) in 1-based indices.
inline CxMatrix lift_oracle(const CxMatrix& X, Index n1) {
  const Index n_c = X.rows();
  const Index n = X.cols();
  const Index n2 = n + 1 - n1;
  CxMatrix Z(n_c * n1, n2);
  for (Index k1 = 1; k1 <= n1; ++k1) {
    for (Index k = 1; k <= n_c; ++k) {
      for (Index k2 = 1; k2 <= n2; ++k2) {
        Z((k1 - 1) * n_c + (k - 1), k2 - 1) = X(k - 1, (k1 + k2 - 1) - 1);
      }
    }
  }
  return Z;
}

// Brute-force weighted anti-diagonal averaging.
inline CxMatrix pinv_oracle(const CxMatrix& Z, Index n_c, Index n1) {
  const Index n2 = Z.cols();
  const Index n = n1 + n2 - 1;
  CxMatrix X = CxMatrix::Zero(n_c, n);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  for (Index k1 = 1; k1 <= n1; ++k1) {
    for (Index k2 = 1; k2 <= n2; ++k2) {
      const Index t = k1 + k2 - 1;
      w(t - 1) += 1.0;
      for (Index k = 1; k <= n_c; ++k) {
        X(k - 1, t - 1) += Z((k1 - 1) * n_c + (k - 1), k2 - 1);
      }
    }
  }
  for (Index t = 0; t < n; ++t) X.col(t) /= w(t);
  return X;
}

inline double rel_error(const CxMatrix& got, const CxMatrix& want) {
  const double denom = want.norm();
  if (denom == 0.0) return got.norm();
  return (got - want).norm() / denom;
}

}  // namespace hankelmc::testutil

#endif
