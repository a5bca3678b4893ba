#include "hankelmc/lanczos.hpp"

#include "hankelmc/rng.hpp"

#include <Eigen/SVD>

namespace hankelmc {

namespace {

constexpr std::uint64_t kStartSeed = 0x68616e6b656c6d63ULL;

CxVector random_unit_vector(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CxVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = Cx(g(rng), g(rng));
  const double norm = v.norm();
  if (norm > 0) v /= norm;
  return v;
}

// Remove components along the first m columns of basis, twice for stability.
void reorthogonalize(CxVector& v, const CxMatrix& basis, Index m) {
  if (m == 0) return;
  const auto Q = basis.leftCols(m);
  for (int pass = 0; pass < 2; ++pass) {
    v.noalias() -= Q * (Q.adjoint() * v);
  }
}

}  // namespace

RankRFactors lanczos_svd(const LinearOperator& op, Index k, const LanczosOptions& opts) {
  if (op.rows < 1 || op.cols < 1) throw std::invalid_argument("lanczos_svd: empty operator");
  if (k < 1) throw std::invalid_argument("lanczos_svd: k must be >= 1");
  if (op.rows < op.cols) {
    // Bidiagonalize the adjoint so the start vector lies in the row space.
    LinearOperator t;
    t.rows = op.cols;
    t.cols = op.rows;
    t.apply = op.apply_adjoint;
    t.apply_adjoint = op.apply;
    RankRFactors f = lanczos_svd(t, k, opts);
    std::swap(f.U, f.V);
    return f;
  }
  const Index dim = std::min(op.rows, op.cols);
  k = std::min(k, dim);
  Index max_iter = opts.max_iter > 0 ? opts.max_iter : 10 * k;
  max_iter = std::min(std::max(max_iter, k + 2), dim);

  std::mt19937_64 rng = make_rng(mix_seed({kStartSeed, static_cast<std::uint64_t>(op.rows),
                                           static_cast<std::uint64_t>(op.cols)}));

  CxMatrix V(op.cols, max_iter);  // right Lanczos vectors
  CxMatrix U(op.rows, max_iter);  // left Lanczos vectors
  RealVector alpha(max_iter);     // bidiagonal diagonal
  RealVector beta(max_iter);      // bidiagonal superdiagonal
  int restarts_left = opts.restarts;

  Index m = 0;
  {
    CxVector v = random_unit_vector(op.cols, rng);
    CxVector u = op.apply(v);
    double a = u.norm();
    while (a <= 0 && restarts_left-- > 0) {
      v = random_unit_vector(op.cols, rng);
      u = op.apply(v);
      a = u.norm();
    }
    if (a <= 0) {
      return RankRFactors{CxMatrix::Zero(op.rows, 0), RealVector(0), CxMatrix::Zero(op.cols, 0)};
    }
    V.col(0) = v;
    U.col(0) = u / a;
    alpha(0) = a;
    m = 1;
  }

  // SVD of the leading m x m upper-bidiagonal block.
  const auto ritz = [&](Index size) {
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(size, size);
    for (Index i = 0; i < size; ++i) {
      B(i, i) = alpha(i);
      if (i + 1 < size) B(i, i + 1) = beta(i);
    }
    return Eigen::JacobiSVD<Eigen::MatrixXd>(B, Eigen::ComputeFullU | Eigen::ComputeFullV);
  };

  while (true) {
    CxVector w = op.apply_adjoint(U.col(m - 1)) - alpha(m - 1) * V.col(m - 1);
    reorthogonalize(w, V, m);
    double b = w.norm();

    // Ritz residual of triplet i after m steps is b * |p_i(m-1)| with p_i the
    // i-th left singular vector of the bidiagonal block.
    if (m >= k && (m % 3 == 0 || m == max_iter || b <= 1e-14 * alpha(0))) {
      const auto svd = ritz(m);
      const auto& s = svd.singularValues();
      const double scale = std::max(s(0), 1e-300);
      bool converged = true;
      for (Index i = 0; i < std::min(k, m); ++i) {
        if (b * std::abs(svd.matrixU()(m - 1, i)) > opts.tol * scale) {
          converged = false;
          break;
        }
      }
      if (converged) break;
    }
    if (m == max_iter) break;

    if (b <= 1e-14 * alpha(0)) {
      // Invariant subspace: continue in a random orthogonal direction.
      if (restarts_left-- <= 0) break;
      w = random_unit_vector(op.cols, rng);
      reorthogonalize(w, V, m);
      b = w.norm();
      if (b <= 0) break;
      beta(m - 1) = 0.0;
      V.col(m) = w / b;
    } else {
      beta(m - 1) = b;
      V.col(m) = w / b;
    }

    CxVector u = op.apply(V.col(m)) - beta(m - 1) * U.col(m - 1);
    reorthogonalize(u, U, m);
    double a = u.norm();
    if (a <= 1e-14 * alpha(0)) {
      if (restarts_left-- <= 0) break;
      u = random_unit_vector(op.rows, rng);
      reorthogonalize(u, U, m);
      a = u.norm();
      if (a <= 0) break;
      alpha(m) = 0.0;
      U.col(m) = u / a;
    } else {
      alpha(m) = a;
      U.col(m) = u / a;
    }
    ++m;
  }

  const auto svd = ritz(m);
  const auto& s = svd.singularValues();
  const Index keep = std::min(k, m);
  Index rank = 0;
  while (rank < keep && s(rank) > 1e-14 * s(0)) ++rank;
  RankRFactors out;
  out.U = U.leftCols(m) * svd.matrixU().leftCols(rank);
  out.V = V.leftCols(m) * svd.matrixV().leftCols(rank);
  out.S = s.head(rank);
  return out;
}

RankRFactors lanczos_svd(const CxMatrix& A, Index k, const LanczosOptions& opts) {
  LinearOperator op;
  op.rows = A.rows();
  op.cols = A.cols();
  op.apply = [&A](const CxVector& v) { return CxVector(A * v); };
  op.apply_adjoint = [&A](const CxVector& u) { return CxVector(A.adjoint() * u); };
  return lanczos_svd(op, k, opts);
}

}  // namespace hankelmc
