#ifndef HANKELMC_HANKEL_OPS_HPP
#define HANKELMC_HANKEL_OPS_HPP

#include "hankelmc/fft.hpp"
#include "hankelmc/types.hpp"

#include <memory>
#include <vector>

namespace hankelmc {

/// Dense block-Hankel lift. Block (k1,k2) of the (n_c*n1) x n2 result is the
/// signal column x_{k1+k2-1}. Reference implementation: slow, always correct.
CxMatrix hankel_lift(const CxMatrix& X, const HankelGeometry& geom);

/// Pseudoinverse of the lift: weighted anti-diagonal averaging back to an
/// n_c x n signal. hankel_pinv(hankel_lift(X)) == X for every X.
CxMatrix hankel_pinv(const CxMatrix& Z, const HankelGeometry& geom);

/// Factor pair contributing left * right^H to a lifted-space matrix.
struct FactorTerm {
  CxMatrix left;   // (n_c*n1) x k
  CxMatrix right;  // n2 x k
};

/// hankel_pinv of sum_j left_j * right_j^H without forming the dense matrix.
/// Each rank-one term maps back through per-channel convolutions, so the cost
/// is O(n_c * k * n log n) instead of O(n_c * n1 * n2).
CxMatrix hankel_pinv_factors(const std::vector<FactorTerm>& terms,
                             const HankelGeometry& geom);
CxMatrix hankel_pinv_factors(const RankRFactors& factors, const HankelGeometry& geom);

/// FFT-backed products with the lift of a fixed signal. Caches the
/// per-channel signal spectra so repeated products (e.g. inside a Lanczos
/// sweep) cost one transform of the incoming vector plus n_c inverse
/// transforms. Instances are immutable after construction and safe to share
/// across threads.
class HankelOperator {
 public:
  HankelOperator(const CxMatrix& X, const HankelGeometry& geom);

  const HankelGeometry& geom() const { return geom_; }
  Index rows() const { return geom_.rows(); }
  Index cols() const { return geom_.cols(); }

  /// hankel_lift(X) * v, length n_c*n1.
  CxVector matvec(const CxVector& v) const;
  /// hankel_lift(X)^H * u, length n2.
  CxVector rmatvec(const CxVector& u) const;

 private:
  HankelGeometry geom_;
  Index fft_len_;
  std::shared_ptr<const Fft> fft_;
  CxMatrix channel_spectra_;  // fft_len x n_c, FFT of each zero-padded channel
};

/// One-shot conveniences matching the operator class.
CxVector hankel_matvec(const CxMatrix& X, const HankelGeometry& geom, const CxVector& v);
CxVector hankel_rmatvec(const CxMatrix& X, const HankelGeometry& geom, const CxVector& u);

}  // namespace hankelmc

#endif
