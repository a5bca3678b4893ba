#ifndef HANKELMC_STRUCTURED_HPP
#define HANKELMC_STRUCTURED_HPP

#include "hankelmc/hankel_ops.hpp"
#include "hankelmc/lanczos.hpp"
#include "hankelmc/types.hpp"

#include <optional>
#include <vector>

namespace hankelmc {

/// A lifted-space matrix kept in structured form:
///
///     W = hankel_lift(signal) + sum_j left_j * right_j^H
///
/// Solver iterates never materialize W densely; products, rank truncation and
/// the pseudoinverse all work on this representation. Immutable in spirit:
/// build it once, then only read.
class StructuredMatrix {
 public:
  explicit StructuredMatrix(HankelGeometry geom) : geom_(std::move(geom)) {}
  StructuredMatrix(HankelGeometry geom, CxMatrix signal);

  const HankelGeometry& geom() const { return geom_; }
  Index rows() const { return geom_.rows(); }
  Index cols() const { return geom_.cols(); }
  bool has_signal() const { return signal_.has_value(); }
  const CxMatrix* signal() const { return signal_ ? &*signal_ : nullptr; }
  const std::vector<FactorTerm>& terms() const { return terms_; }

  /// Add coeff * hankel_lift(extra_signal).
  void add_signal(const CxMatrix& extra, Cx coeff = Cx(1, 0));
  /// Add coeff * left * right^H. The coefficient is folded into the left factor.
  void add_term(const CxMatrix& left, const CxMatrix& right, Cx coeff = Cx(1, 0));
  /// Add coeff * other (signal and terms).
  void add_scaled(const StructuredMatrix& other, Cx coeff);
  void add_scaled(const RankRFactors& factors, Cx coeff);

  CxVector matvec(const CxVector& v) const;
  CxVector rmatvec(const CxVector& u) const;
  /// W * B, one matvec per column.
  CxMatrix matmat(const CxMatrix& B) const;
  /// W^H * B.
  CxMatrix rmatmat(const CxMatrix& B) const;

  CxMatrix dense() const;
  /// hankel_pinv(W) without densifying.
  CxMatrix pinv() const;

  LinearOperator as_operator() const;

 private:
  void ensure_op();

  HankelGeometry geom_;
  std::optional<CxMatrix> signal_;
  std::vector<FactorTerm> terms_;
  std::shared_ptr<const HankelOperator> op_;  // FFT oracle for the signal part
};

/// Orthogonal projection of Z onto the tangent space of the rank-r manifold
/// at base = U S V^H:
///
///     P(Z) = U U^H Z + Z V V^H - U U^H Z V V^H
///
/// returned in the two-term factored form U*(U^H Z) + (Z V - U U^H Z V)*V^H,
/// so downstream truncation works on 2r columns.
StructuredMatrix tangent_project(const RankRFactors& base, const StructuredMatrix& Z);

/// Best rank-r approximation (top-r SVD triple).
///
/// Dense matrices go through a full SVD. Factor-only structured matrices use
/// thin QR of the stacked factors plus an SVD of the small core, which is
/// exact. Signal-bearing structured matrices use a partial SVD: dense when
/// small enough (policy Auto), Lanczos bidiagonalization on the FFT product
/// oracle otherwise. Singular values below 1e-14 * sigma_1 are dropped.
RankRFactors truncate_rank(const CxMatrix& W, Index r);
RankRFactors truncate_rank(const StructuredMatrix& W, Index r,
                           SvdPolicy policy = SvdPolicy::Auto);

/// Top-k singular triplets of a structured matrix under the given policy.
RankRFactors partial_svd(const StructuredMatrix& W, Index k,
                         SvdPolicy policy = SvdPolicy::Auto);

}  // namespace hankelmc

#endif
