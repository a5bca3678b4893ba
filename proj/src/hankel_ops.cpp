#include "hankelmc/hankel_ops.hpp"

namespace hankelmc {

RealVector anti_diag_weights(Index n1, Index n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("anti_diag_weights: n1, n2 must be >= 1");
  const Index n = n1 + n2 - 1;
  RealVector w(n);
  for (Index t = 1; t <= n; ++t) {
    const Index count = std::min({t, n1, n2, n + 1 - t});
    w(t - 1) = static_cast<double>(count);
  }
  return w;
}

CxMatrix hankel_lift(const CxMatrix& X, const HankelGeometry& geom) {
  if (X.rows() != geom.n_c || X.cols() != geom.n) {
    throw std::invalid_argument("hankel_lift: signal shape mismatch");
  }
  CxMatrix Z(geom.rows(), geom.cols());
  for (Index k2 = 0; k2 < geom.n2; ++k2) {
    for (Index k1 = 0; k1 < geom.n1; ++k1) {
      Z.block(k1 * geom.n_c, k2, geom.n_c, 1) = X.col(k1 + k2);
    }
  }
  return Z;
}

CxMatrix hankel_pinv(const CxMatrix& Z, const HankelGeometry& geom) {
  if (Z.rows() != geom.rows() || Z.cols() != geom.cols()) {
    throw std::invalid_argument("hankel_pinv: lifted shape mismatch");
  }
  CxMatrix X = CxMatrix::Zero(geom.n_c, geom.n);
  for (Index k2 = 0; k2 < geom.n2; ++k2) {
    for (Index k1 = 0; k1 < geom.n1; ++k1) {
      X.col(k1 + k2) += Z.block(k1 * geom.n_c, k2, geom.n_c, 1);
    }
  }
  for (Index t = 0; t < geom.n; ++t) X.col(t) /= geom.weights(t);
  return X;
}

CxMatrix hankel_pinv_factors(const std::vector<FactorTerm>& terms,
                             const HankelGeometry& geom) {
  const Index n = geom.n;
  const Index fft_len = next_pow2(n);
  const Fft fft(fft_len);

  // Accumulate sum_j conv(left_j restricted to channel c, conj(right_j)) in
  // the frequency domain, one spectrum per channel.
  CxMatrix acc = CxMatrix::Zero(fft_len, geom.n_c);
  CxVector pad = CxVector::Zero(fft_len);
  CxVector spec(fft_len);
  bool any = false;
  for (const FactorTerm& term : terms) {
    if (term.left.cols() == 0) continue;
    if (term.left.rows() != geom.rows() || term.right.rows() != geom.cols() ||
        term.left.cols() != term.right.cols()) {
      throw std::invalid_argument("hankel_pinv_factors: factor shape mismatch");
    }
    any = true;
    for (Index m = 0; m < term.right.cols(); ++m) {
      pad.setZero();
      pad.head(geom.n2) = term.right.col(m).conjugate();
      CxVector rspec = fft.forward(pad);
      for (Index c = 0; c < geom.n_c; ++c) {
        pad.setZero();
        for (Index k1 = 0; k1 < geom.n1; ++k1) pad(k1) = term.left(k1 * geom.n_c + c, m);
        fft.forward(pad.data(), spec.data());
        acc.col(c).array() += spec.array() * rspec.array();
      }
    }
  }

  CxMatrix X = CxMatrix::Zero(geom.n_c, geom.n);
  if (!any) return X;
  for (Index c = 0; c < geom.n_c; ++c) {
    CxVector conv = fft.inverse(acc.col(c));
    X.row(c) = conv.head(n).transpose();
  }
  for (Index t = 0; t < geom.n; ++t) X.col(t) /= geom.weights(t);
  return X;
}

CxMatrix hankel_pinv_factors(const RankRFactors& factors, const HankelGeometry& geom) {
  if (factors.empty()) return CxMatrix::Zero(geom.n_c, geom.n);
  std::vector<FactorTerm> terms(1);
  terms[0].left = factors.U * factors.S.asDiagonal();
  terms[0].right = factors.V;
  return hankel_pinv_factors(terms, geom);
}

HankelOperator::HankelOperator(const CxMatrix& X, const HankelGeometry& geom)
    : geom_(geom),
      fft_len_(next_pow2(geom.n)),
      fft_(std::make_shared<const Fft>(fft_len_)) {
  if (X.rows() != geom.n_c || X.cols() != geom.n) {
    throw std::invalid_argument("HankelOperator: signal shape mismatch");
  }
  channel_spectra_.resize(fft_len_, geom.n_c);
  CxVector pad = CxVector::Zero(fft_len_);
  for (Index c = 0; c < geom.n_c; ++c) {
    pad.setZero();
    pad.head(geom.n) = X.row(c).transpose();
    fft_->forward(pad.data(), channel_spectra_.col(c).data());
  }
}

CxVector HankelOperator::matvec(const CxVector& v) const {
  if (v.size() != geom_.n2) throw std::invalid_argument("HankelOperator::matvec: size mismatch");
  // y_c[k1] = sum_p x_c[k1+p] v[p] = conv(x_c, rev(v))[n2-1+k1].
  CxVector pad = CxVector::Zero(fft_len_);
  pad.head(geom_.n2) = v.reverse();
  const CxVector vspec = fft_->forward(pad);
  CxVector y(geom_.rows());
  CxVector spec(fft_len_), conv(fft_len_);
  for (Index c = 0; c < geom_.n_c; ++c) {
    spec.array() = channel_spectra_.col(c).array() * vspec.array();
    fft_->inverse(spec.data(), conv.data());
    for (Index k1 = 0; k1 < geom_.n1; ++k1) y(k1 * geom_.n_c + c) = conv(geom_.n2 - 1 + k1);
  }
  return y;
}

CxVector HankelOperator::rmatvec(const CxVector& u) const {
  if (u.size() != geom_.rows()) {
    throw std::invalid_argument("HankelOperator::rmatvec: size mismatch");
  }
  // z[q] = sum_c conj( sum_p x_c[p+q] conj(u_c[p]) )
  //      = sum_c conj( conv(x_c, rev(conj(u_c)))[n1-1+q] ).
  CxVector z = CxVector::Zero(geom_.n2);
  CxVector pad(fft_len_), spec(fft_len_), conv(fft_len_);
  for (Index c = 0; c < geom_.n_c; ++c) {
    pad.setZero();
    for (Index k1 = 0; k1 < geom_.n1; ++k1) {
      pad(geom_.n1 - 1 - k1) = std::conj(u(k1 * geom_.n_c + c));
    }
    fft_->forward(pad.data(), spec.data());
    spec.array() *= channel_spectra_.col(c).array();
    fft_->inverse(spec.data(), conv.data());
    for (Index q = 0; q < geom_.n2; ++q) z(q) += std::conj(conv(geom_.n1 - 1 + q));
  }
  return z;
}

CxVector hankel_matvec(const CxMatrix& X, const HankelGeometry& geom, const CxVector& v) {
  return HankelOperator(X, geom).matvec(v);
}

CxVector hankel_rmatvec(const CxMatrix& X, const HankelGeometry& geom, const CxVector& u) {
  return HankelOperator(X, geom).rmatvec(u);
}

}  // namespace hankelmc
