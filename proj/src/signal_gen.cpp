#include "hankelmc/signal_gen.hpp"

#include "hankelmc/hankel_ops.hpp"
#include "hankelmc/rng.hpp"

#include <Eigen/SVD>

namespace hankelmc {

namespace {

constexpr double kGapThreshold = 1e6;

double wrap_distance(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, 1.0 - d);
}

}  // namespace

CxMatrix evaluate_spectral(const SpectralParams& params, Index n_c, Index n) {
  const Index r = params.modes();
  if (params.amp.rows() != n_c || params.amp.cols() != r || params.damp.size() != r) {
    throw std::invalid_argument("evaluate_spectral: parameter shape mismatch");
  }
  CxMatrix X = CxMatrix::Zero(n_c, n);
  for (Index i = 0; i < r; ++i) {
    const Cx log_lambda(-params.damp(i), 2.0 * M_PI * params.freq(i));
    CxVector powers(n);
    for (Index t = 0; t < n; ++t) powers(t) = std::exp(log_lambda * double(t + 1));
    X.noalias() += params.amp.col(i) * powers.transpose();
  }
  return X;
}

MultiChannelSignal gen_spectral(Index n_c, Index n, Index r, std::uint64_t seed,
                                const SpectralGenOptions& opts) {
  if (n_c < 1 || r < 1) throw std::invalid_argument("gen_spectral: need n_c >= 1, r >= 1");
  if (n < 2 * r) throw std::invalid_argument("gen_spectral: need n >= 2r");
  if (opts.min_sep > 0 && opts.min_sep * double(r) >= 1.0) {
    throw std::invalid_argument("gen_spectral: min_sep infeasible, min_sep * r >= 1");
  }

  std::mt19937_64 rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  SpectralParams params;
  params.freq.resize(r);
  params.damp = RealVector::Zero(r);
  params.amp.resize(n_c, r);

  bool ok = false;
  for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
    for (Index i = 0; i < r; ++i) params.freq(i) = unit(rng);
    ok = true;
    if (opts.min_sep > 0) {
      for (Index i = 0; i < r && ok; ++i) {
        for (Index j = i + 1; j < r; ++j) {
          if (wrap_distance(params.freq(i), params.freq(j)) < opts.min_sep) {
            ok = false;
            break;
          }
        }
      }
    } else {
      // Distinct frequencies are required even without a separation target.
      for (Index i = 0; i < r && ok; ++i) {
        for (Index j = i + 1; j < r; ++j) {
          if (params.freq(i) == params.freq(j)) {
            ok = false;
            break;
          }
        }
      }
    }
  }
  if (!ok) throw std::runtime_error("gen_spectral: could not satisfy min_sep in 1000 draws");

  if (opts.damped) {
    std::uniform_real_distribution<double> dd(0.5 / double(n), 2.0 / double(n));
    for (Index i = 0; i < r; ++i) params.damp(i) = dd(rng);
  }

  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (Index i = 0; i < r; ++i) {
    for (Index k = 0; k < n_c; ++k) {
      const double theta = angle(rng);
      const double a = unit(rng);
      const double mag = 1.0 + std::pow(10.0, opts.amp_exponent * a);
      params.amp(k, i) = std::polar(mag, theta);
    }
  }
  if (opts.first_mode_scale != 1.0) params.amp.col(0) *= opts.first_mode_scale;

  MultiChannelSignal out;
  out.data = evaluate_spectral(params, n_c, n);
  out.params = std::move(params);
  out.seed = seed;
  return out;
}

MultiChannelSignal gen_lds(const LdsParams& params, Index n) {
  const Index n_p = params.A.rows();
  if (params.A.cols() != n_p || params.C.cols() != n_p || params.s1.size() != n_p) {
    throw std::invalid_argument("gen_lds: dimension mismatch");
  }
  if (n < 1) throw std::invalid_argument("gen_lds: need n >= 1");
  MultiChannelSignal out;
  out.data.resize(params.C.rows(), n);
  CxVector state = params.s1;
  for (Index t = 0; t < n; ++t) {
    out.data.col(t) = params.C * state;
    if (t + 1 < n) state = params.A * state;
  }
  return out;
}

namespace {

// Thin SVD plus gap-validated numerical rank.
struct LiftSvd {
  RealVector S;
  CxMatrix U, V;
  Index rank;
};

LiftSvd lift_svd_with_rank(const CxMatrix& X, const HankelGeometry& geom, Index r) {
  Eigen::BDCSVD<CxMatrix> svd(hankel_lift(X, geom), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();
  const Index dim = s.size();
  Index rank = r;
  if (rank <= 0) {
    rank = 0;
    for (Index i = 0; i + 1 < dim; ++i) {
      if (s(i) <= 0) break;
      if (s(i + 1) <= 0 || s(i) / s(i + 1) >= kGapThreshold) {
        rank = i + 1;
        break;
      }
    }
    if (rank == 0) throw std::runtime_error("incoherence: no singular value gap found");
  } else {
    if (rank > dim) throw std::invalid_argument("incoherence: r exceeds lift dimensions");
    if (s(rank - 1) <= 0) throw std::runtime_error("incoherence: sigma_r is zero");
    if (rank < dim) {
      const double next = s(rank);
      if (next > 0 && s(rank - 1) / next < kGapThreshold) {
        throw std::runtime_error("incoherence: supplied rank fails the 1e6 gap test");
      }
    }
  }
  return LiftSvd{s, svd.matrixU(), svd.matrixV(), rank};
}

}  // namespace

Incoherence incoherence(const CxMatrix& X, const HankelGeometry& geom, Index r) {
  const LiftSvd svd = lift_svd_with_rank(X, geom, r);
  Incoherence out;
  out.rank = svd.rank;
  const auto U = svd.U.leftCols(svd.rank);
  const auto V = svd.V.leftCols(svd.rank);
  out.mu_row = U.rowwise().squaredNorm().maxCoeff() * double(geom.rows()) / double(svd.rank);
  out.mu_col = V.rowwise().squaredNorm().maxCoeff() * double(geom.cols()) / double(svd.rank);
  out.mu = std::max(out.mu_row, out.mu_col);
  return out;
}

double max_single_channel_incoherence(const CxMatrix& X, const HankelGeometry& geom, Index r) {
  double mu0 = 0.0;
  HankelGeometry single(1, geom.n, geom.n1);
  for (Index k = 0; k < X.rows(); ++k) {
    mu0 = std::max(mu0, incoherence(X.row(k), single, r).mu);
  }
  return mu0;
}

double condition_number(const CxMatrix& X, const HankelGeometry& geom, Index r) {
  if (r < 1) throw std::invalid_argument("condition_number: r must be >= 1");
  const LiftSvd svd = lift_svd_with_rank(X, geom, r);
  return svd.S(0) / svd.S(r - 1);
}

}  // namespace hankelmc
