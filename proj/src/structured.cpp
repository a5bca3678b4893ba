#include "hankelmc/structured.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

namespace hankelmc {

namespace {

constexpr double kRankDropTol = 1e-14;

RankRFactors take_top(const CxMatrix& U, const RealVector& S, const CxMatrix& V, Index r) {
  Index rank = std::min(r, S.size());
  while (rank > 0 && !(S(rank - 1) > kRankDropTol * S(0))) --rank;
  RankRFactors out;
  out.U = U.leftCols(rank);
  out.S = S.head(rank);
  out.V = V.leftCols(rank);
  return out;
}

}  // namespace

StructuredMatrix::StructuredMatrix(HankelGeometry geom, CxMatrix signal)
    : geom_(std::move(geom)) {
  if (signal.rows() != geom_.n_c || signal.cols() != geom_.n) {
    throw std::invalid_argument("StructuredMatrix: signal shape mismatch");
  }
  signal_ = std::move(signal);
  ensure_op();
}

void StructuredMatrix::add_signal(const CxMatrix& extra, Cx coeff) {
  if (extra.rows() != geom_.n_c || extra.cols() != geom_.n) {
    throw std::invalid_argument("StructuredMatrix::add_signal: shape mismatch");
  }
  if (signal_) {
    *signal_ += coeff * extra;
  } else {
    signal_ = coeff * extra;
  }
  op_.reset();
  ensure_op();
}

void StructuredMatrix::add_term(const CxMatrix& left, const CxMatrix& right, Cx coeff) {
  if (left.cols() == 0) return;
  if (left.rows() != rows() || right.rows() != cols() || left.cols() != right.cols()) {
    throw std::invalid_argument("StructuredMatrix::add_term: factor shape mismatch");
  }
  terms_.push_back(FactorTerm{coeff * left, right});
}

void StructuredMatrix::add_scaled(const StructuredMatrix& other, Cx coeff) {
  if (other.rows() != rows() || other.cols() != cols()) {
    throw std::invalid_argument("StructuredMatrix::add_scaled: shape mismatch");
  }
  if (other.signal_) add_signal(*other.signal_, coeff);
  for (const FactorTerm& t : other.terms_) add_term(t.left, t.right, coeff);
}

void StructuredMatrix::add_scaled(const RankRFactors& factors, Cx coeff) {
  if (factors.empty()) return;
  add_term(factors.U * factors.S.asDiagonal(), factors.V, coeff);
}

void StructuredMatrix::ensure_op() {
  if (signal_ && !op_) op_ = std::make_shared<const HankelOperator>(*signal_, geom_);
}

CxVector StructuredMatrix::matvec(const CxVector& v) const {
  CxVector y = CxVector::Zero(rows());
  if (op_) y = op_->matvec(v);
  for (const FactorTerm& t : terms_) y.noalias() += t.left * (t.right.adjoint() * v);
  return y;
}

CxVector StructuredMatrix::rmatvec(const CxVector& u) const {
  CxVector z = CxVector::Zero(cols());
  if (op_) z = op_->rmatvec(u);
  for (const FactorTerm& t : terms_) z.noalias() += t.right * (t.left.adjoint() * u);
  return z;
}

CxMatrix StructuredMatrix::matmat(const CxMatrix& B) const {
  CxMatrix Y(rows(), B.cols());
  for (Index j = 0; j < B.cols(); ++j) Y.col(j) = matvec(B.col(j));
  return Y;
}

CxMatrix StructuredMatrix::rmatmat(const CxMatrix& B) const {
  CxMatrix Y(cols(), B.cols());
  for (Index j = 0; j < B.cols(); ++j) Y.col(j) = rmatvec(B.col(j));
  return Y;
}

CxMatrix StructuredMatrix::dense() const {
  CxMatrix W = CxMatrix::Zero(rows(), cols());
  if (signal_) W = hankel_lift(*signal_, geom_);
  for (const FactorTerm& t : terms_) W.noalias() += t.left * t.right.adjoint();
  return W;
}

CxMatrix StructuredMatrix::pinv() const {
  CxMatrix X = hankel_pinv_factors(terms_, geom_);
  if (signal_) X += *signal_;  // hankel_pinv(hankel_lift(s)) == s
  return X;
}

LinearOperator StructuredMatrix::as_operator() const {
  LinearOperator op;
  op.rows = rows();
  op.cols = cols();
  op.apply = [this](const CxVector& v) { return matvec(v); };
  op.apply_adjoint = [this](const CxVector& u) { return rmatvec(u); };
  return op;
}

StructuredMatrix tangent_project(const RankRFactors& base, const StructuredMatrix& Z) {
  if (base.U.rows() != Z.rows() || base.V.rows() != Z.cols()) {
    throw std::invalid_argument("tangent_project: base/operand shape mismatch");
  }
  StructuredMatrix out(Z.geom());
  if (base.empty()) return out;  // tangent space of the zero manifold point
  // C1 = U^H Z (r x n2), computed column-wise as (Z^H U)^H.
  const CxMatrix C1h = Z.rmatmat(base.U);  // n2 x r
  const CxMatrix ZV = Z.matmat(base.V);    // rows x r
  const CxMatrix core = C1h.adjoint() * base.V;  // r x r, equals U^H Z V
  CxMatrix C2 = ZV - base.U * core;
  out.add_term(base.U, C1h);
  out.add_term(C2, base.V);
  return out;
}

RankRFactors truncate_rank(const CxMatrix& W, Index r) {
  if (r < 1) throw std::invalid_argument("truncate_rank: r must be >= 1");
  if (r > std::min(W.rows(), W.cols())) {
    throw std::invalid_argument("truncate_rank: r exceeds matrix dimensions");
  }
  if (!W.allFinite()) throw std::invalid_argument("truncate_rank: non-finite input");
  Eigen::BDCSVD<CxMatrix> svd(W, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return take_top(svd.matrixU(), svd.singularValues(), svd.matrixV(), r);
}

namespace {

// Exact truncation of a factor-only structured matrix: thin QR of the stacked
// left/right factors, then an SVD of the small core.
RankRFactors truncate_factors(const StructuredMatrix& W, Index r) {
  Index total = 0;
  for (const FactorTerm& t : W.terms()) total += t.left.cols();
  if (total == 0) {
    return RankRFactors{CxMatrix::Zero(W.rows(), 0), RealVector(0), CxMatrix::Zero(W.cols(), 0)};
  }
  CxMatrix P(W.rows(), total);
  CxMatrix Q(W.cols(), total);
  Index at = 0;
  for (const FactorTerm& t : W.terms()) {
    P.middleCols(at, t.left.cols()) = t.left;
    Q.middleCols(at, t.right.cols()) = t.right;
    at += t.left.cols();
  }
  if (total > W.rows() || total > W.cols()) {
    // Degenerate shapes; the small-core trick needs tall factors.
    return truncate_rank(CxMatrix(P * Q.adjoint()), r);
  }
  Eigen::HouseholderQR<CxMatrix> qrP(P);
  Eigen::HouseholderQR<CxMatrix> qrQ(Q);
  const CxMatrix RP = qrP.matrixQR().topRows(total).triangularView<Eigen::Upper>();
  const CxMatrix RQ = qrQ.matrixQR().topRows(total).triangularView<Eigen::Upper>();
  CxMatrix core = RP * RQ.adjoint();
  Eigen::BDCSVD<CxMatrix> svd(core, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Index rank = std::min<Index>(r, svd.singularValues().size());
  CxMatrix QP = qrP.householderQ() * CxMatrix::Identity(W.rows(), total);
  CxMatrix QQ = qrQ.householderQ() * CxMatrix::Identity(W.cols(), total);
  return take_top(QP * svd.matrixU(), svd.singularValues(), QQ * svd.matrixV(), rank);
}

bool use_dense(const StructuredMatrix& W, SvdPolicy policy) {
  switch (policy) {
    case SvdPolicy::Dense:
      return true;
    case SvdPolicy::Lanczos:
      return false;
    case SvdPolicy::Auto:
    default:
      return W.rows() * W.cols() <= kDenseSvdMaxElements;
  }
}

}  // namespace

RankRFactors truncate_rank(const StructuredMatrix& W, Index r, SvdPolicy policy) {
  if (r < 1) throw std::invalid_argument("truncate_rank: r must be >= 1");
  if (r > std::min(W.rows(), W.cols())) {
    throw std::invalid_argument("truncate_rank: r exceeds matrix dimensions");
  }
  if (!W.has_signal()) return truncate_factors(W, r);
  return partial_svd(W, r, policy);
}

RankRFactors partial_svd(const StructuredMatrix& W, Index k, SvdPolicy policy) {
  if (k < 1) throw std::invalid_argument("partial_svd: k must be >= 1");
  k = std::min(k, std::min(W.rows(), W.cols()));
  if (!W.has_signal()) return truncate_factors(W, k);
  if (use_dense(W, policy)) {
    const CxMatrix D = W.dense();
    if (!D.allFinite()) throw std::invalid_argument("partial_svd: non-finite input");
    Eigen::BDCSVD<CxMatrix> svd(D, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return take_top(svd.matrixU(), svd.singularValues(), svd.matrixV(), k);
  }
  return lanczos_svd(W.as_operator(), k);
}

}  // namespace hankelmc
