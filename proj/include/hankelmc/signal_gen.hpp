#ifndef HANKELMC_SIGNAL_GEN_HPP
#define HANKELMC_SIGNAL_GEN_HPP

#include "hankelmc/types.hpp"

#include <cstdint>

namespace hankelmc {

struct SpectralGenOptions {
  bool damped = false;
  double min_sep = 0.0;       // minimum wrap-around frequency separation, 0 = off
  double amp_exponent = 1.0;  // magnitude law 1 + 10^(amp_exponent * a), a ~ U(0,1)
  double first_mode_scale = 1.0;  // extra factor on the first mode's amplitudes
};

/// Random sum-of-sinusoids signal: r frequencies uniform in (0,1), amplitude
/// angles uniform in (0,2pi), magnitudes 1 + 10^(amp_exponent*a) with a
/// uniform in (0,1); dampings are zero unless `damped`, in which case they are
/// uniform in (1/(2n), 2/n). Deterministic for a fixed seed. When min_sep is
/// set, the frequency set is rejection-sampled up to 1000 times before giving
/// up with an error.
MultiChannelSignal gen_spectral(Index n_c, Index n, Index r, std::uint64_t seed,
                                const SpectralGenOptions& opts = {});

struct LdsParams {
  CxMatrix A;   // n_p x n_p state transition
  CxMatrix C;   // n_c x n_p observation map
  CxVector s1;  // initial state
};

/// Linear dynamical system output: column t is C * A^(t-1) * s1.
MultiChannelSignal gen_lds(const LdsParams& params, Index n);

struct Incoherence {
  double mu = 0.0;      // max of the two sides
  double mu_row = 0.0;  // left singular vectors, scaled by (n_c*n1)/r
  double mu_col = 0.0;  // right singular vectors, scaled by n2/r
  Index rank = 0;
};

/// Incoherence of the lift from its thin SVD. When r <= 0 the numerical rank
/// is detected by scanning for a singular value gap of at least 1e6; a
/// supplied r is validated against the same gap test.
Incoherence incoherence(const CxMatrix& X, const HankelGeometry& geom, Index r = 0);

/// Largest single-channel incoherence: each row lifted with the same n1.
double max_single_channel_incoherence(const CxMatrix& X, const HankelGeometry& geom,
                                      Index r = 0);

/// Condition number sigma_1 / sigma_r of the lift.
double condition_number(const CxMatrix& X, const HankelGeometry& geom, Index r);

}  // namespace hankelmc

#endif
