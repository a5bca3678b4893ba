#ifndef HANKELMC_LANCZOS_HPP
#define HANKELMC_LANCZOS_HPP

#include "hankelmc/types.hpp"

#include <functional>

namespace hankelmc {

/// Matrix-free operator: products with A and A^H.
struct LinearOperator {
  Index rows = 0;
  Index cols = 0;
  std::function<CxVector(const CxVector&)> apply;          // A * v, v in C^cols
  std::function<CxVector(const CxVector&)> apply_adjoint;  // A^H * u, u in C^rows
};

struct LanczosOptions {
  Index max_iter = 0;    // 0: 10*k, clamped to min(rows, cols)
  double tol = 1e-10;    // Ritz residual tolerance relative to sigma_1
  int restarts = 3;      // random restarts tolerated on breakdown
};

/// Top-k singular triplets by Golub-Kahan-Lanczos bidiagonalization with full
/// reorthogonalization. Deterministic: the start vector comes from a fixed
/// internal seed. Returns up to k triplets; fewer when the numerical rank of
/// the operator is smaller. If the iteration cap is reached first, the best
/// current Ritz approximations are returned.
RankRFactors lanczos_svd(const LinearOperator& op, Index k,
                         const LanczosOptions& opts = {});

/// Convenience wrapper around a dense matrix.
RankRFactors lanczos_svd(const CxMatrix& A, Index k, const LanczosOptions& opts = {});

}  // namespace hankelmc

#endif
