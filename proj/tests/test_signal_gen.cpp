#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hankelmc/hankel_ops.hpp"
#include "hankelmc/signal_gen.hpp"
#include "test_util.hpp"

#include <Eigen/SVD>

using namespace hankelmc;
namespace tu = hankelmc::testutil;

TEST_CASE("a single DC mode gives a constant all-ones row") {
  SpectralParams p;
  p.freq = RealVector::Zero(1);
  p.damp = RealVector::Zero(1);
  p.amp = CxMatrix::Ones(1, 1);
  CxMatrix X = evaluate_spectral(p, 1, 12);
  for (Index t = 0; t < 12; ++t) CHECK(std::abs(X(0, t) - Cx(1, 0)) <= 1e-15);
}

TEST_CASE("generated spectral signals have lift rank exactly r") {
  auto seed_gen = tu::rng(211);
  for (int trial = 0; trial < 20; ++trial) {
    MultiChannelSignal sig = gen_spectral(3, 100, 5, seed_gen());
    HankelGeometry g(3, 100, 50);
    Eigen::BDCSVD<CxMatrix> svd(hankel_lift(sig.data, g));
    const auto& s = svd.singularValues();
    CHECK(s(5) / s(4) < 1e-8);
  }
}

TEST_CASE("lift rank is r for any n1 in [r, n+1-r]") {
  auto seed_gen = tu::rng(213);
  const Index r = 3, n = 40;
  for (int trial = 0; trial < 20; ++trial) {
    MultiChannelSignal sig = gen_spectral(2, n, r, seed_gen());
    std::uniform_int_distribution<Index> n1d(r, n + 1 - r);
    const Index n1 = n1d(seed_gen);
    HankelGeometry g(2, n, n1);
    Eigen::BDCSVD<CxMatrix> svd(hankel_lift(sig.data, g));
    const auto& s = svd.singularValues();
    CHECK(s(r) / s(r - 1) < 1e-8);
  }
}

TEST_CASE("gen_spectral is deterministic and validates inputs") {
  MultiChannelSignal a = gen_spectral(4, 50, 3, 77);
  MultiChannelSignal b = gen_spectral(4, 50, 3, 77);
  CHECK((a.data - b.data).norm() == 0.0);
  REQUIRE(a.params.has_value());
  CHECK((a.params->freq - b.params->freq).norm() == 0.0);
  CHECK((a.params->amp - b.params->amp).norm() == 0.0);

  MultiChannelSignal c = gen_spectral(4, 50, 3, 78);
  CHECK((a.data - c.data).norm() > 0.0);

  CHECK_THROWS_AS(gen_spectral(4, 5, 3, 1), std::invalid_argument);  // n < 2r
  SpectralGenOptions bad;
  bad.min_sep = 0.5;
  CHECK_THROWS_AS(gen_spectral(4, 50, 3, 1, bad), std::invalid_argument);
}

TEST_CASE("frequency separation and damping options") {
  SpectralGenOptions opts;
  opts.min_sep = 0.08;
  auto seed_gen = tu::rng(217);
  for (int trial = 0; trial < 20; ++trial) {
    MultiChannelSignal sig = gen_spectral(2, 60, 5, seed_gen(), opts);
    const RealVector& f = sig.params->freq;
    for (Index i = 0; i < 5; ++i) {
      for (Index j = i + 1; j < 5; ++j) {
        const double d = std::abs(f(i) - f(j));
        CHECK(std::min(d, 1.0 - d) >= opts.min_sep);
      }
    }
    CHECK(sig.params->damp.norm() == 0.0);
  }

  SpectralGenOptions damped;
  damped.damped = true;
  MultiChannelSignal sig = gen_spectral(2, 60, 4, 5, damped);
  for (Index i = 0; i < 4; ++i) CHECK(sig.params->damp(i) > 0.0);
  // Params reproduce the stored data.
  CHECK(tu::rel_error(evaluate_spectral(*sig.params, 2, 60), sig.data) <= 1e-12);
}

TEST_CASE("gen_lds special cases and rank oracle") {
  const Index n_p = 3, n = 20;
  LdsParams p;
  p.A = CxMatrix::Identity(n_p, n_p);
  p.C = CxMatrix::Identity(n_p, n_p);
  auto gen = tu::rng(219);
  p.s1 = tu::random_complex_vector(n_p, gen);
  MultiChannelSignal sig = gen_lds(p, n);
  for (Index t = 0; t < n; ++t) CHECK((sig.data.col(t) - p.s1).norm() == 0.0);

  p.A = CxMatrix::Zero(n_p, n_p);
  sig = gen_lds(p, n);
  CHECK((sig.data.col(0) - p.s1).norm() == 0.0);
  CHECK(sig.data.rightCols(n - 1).norm() == 0.0);

  // Diagonalizable A with r excited modes: lift rank equals r.
  const Index r = 2;
  CxMatrix D = CxMatrix::Zero(n_p, n_p);
  D(0, 0) = std::polar(1.0, 0.9);
  D(1, 1) = std::polar(0.98, 2.1);
  D(2, 2) = std::polar(0.9, 4.0);
  p.A = D;
  p.C = tu::random_complex(2, n_p, gen);
  p.s1 = tu::random_complex_vector(n_p, gen);
  p.s1(2) = 0;  // third mode not excited
  sig = gen_lds(p, n);
  HankelGeometry g(2, n, 8);
  Eigen::BDCSVD<CxMatrix> svd(hankel_lift(sig.data, g));
  CHECK(svd.singularValues()(r) / svd.singularValues()(r - 1) < 1e-8);

  p.s1 = CxVector::Zero(n_p + 1);
  CHECK_THROWS_AS(gen_lds(p, n), std::invalid_argument);
}

TEST_CASE("incoherence of the all-ones signal is 1") {
  CxMatrix X = CxMatrix::Ones(1, 21);
  for (Index n1 : {3, 7, 11, 15}) {
    HankelGeometry g(1, 21, n1);
    Incoherence inc = incoherence(X, g);
    CHECK(inc.rank == 1);
    CHECK(inc.mu == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("incoherence of a single spike is n1") {
  // n odd and n1 = n2 so both sides give the same value.
  const Index n = 15, n1 = 8;
  CxMatrix X = CxMatrix::Zero(1, n);
  X(0, 0) = Cx(1, 0);
  HankelGeometry g(1, n, n1);
  Incoherence inc = incoherence(X, g);
  CHECK(inc.rank == 1);
  CHECK(inc.mu == doctest::Approx(double(n1)).epsilon(1e-10));
}

TEST_CASE("multi-channel incoherence is below n_c times the single-channel one") {
  auto seed_gen = tu::rng(223);
  SpectralGenOptions opts;
  opts.min_sep = 0.05;
  for (int trial = 0; trial < 20; ++trial) {
    const Index n_c = 4, n = 60, r = 3;
    MultiChannelSignal sig = gen_spectral(n_c, n, r, seed_gen(), opts);
    HankelGeometry g(n_c, n, n / 2);
    const double mu = incoherence(sig.data, g, r).mu;
    const double mu0 = max_single_channel_incoherence(sig.data, g, r);
    CHECK(mu <= double(n_c) * mu0 * (1.0 + 1e-9));
  }
}

TEST_CASE("incoherence ignores global scale and per-channel phase") {
  MultiChannelSignal sig = gen_spectral(3, 48, 3, 999);
  HankelGeometry g(3, 48, 24);
  const double mu = incoherence(sig.data, g, 3).mu;

  CxMatrix scaled = 3.7 * sig.data;
  CHECK(incoherence(scaled, g, 3).mu == doctest::Approx(mu).epsilon(1e-8));

  CxMatrix phased = sig.data;
  phased.row(1) *= std::polar(1.0, 1.234);
  CHECK(incoherence(phased, g, 3).mu == doctest::Approx(mu).epsilon(1e-8));
}

TEST_CASE("rank detection is loud when there is no gap") {
  auto gen = tu::rng(227);
  CxMatrix X = tu::random_complex(2, 24, gen);  // generic: full-rank lift
  HankelGeometry g(2, 24, 12);
  CHECK_THROWS(incoherence(X, g));
  CHECK_THROWS(incoherence(X, g, 3));

  MultiChannelSignal sig = gen_spectral(2, 24, 3, 31);
  CHECK_THROWS(incoherence(sig.data, g, 2));  // wrong supplied rank
  CHECK_NOTHROW(incoherence(sig.data, g, 3));
}

TEST_CASE("condition number: rank-1, orthogonal modes, and amplitude inflation") {
  MultiChannelSignal one = gen_spectral(2, 40, 1, 3);
  HankelGeometry g1(2, 40, 20);
  CHECK(condition_number(one.data, g1, 1) == doctest::Approx(1.0));

  // Equal-amplitude modes on a grid aligned with n1 have nearly orthogonal
  // factors, so the lift is nearly perfectly conditioned.
  SpectralParams p;
  p.freq = RealVector(3);
  p.freq << 1.0 / 16, 5.0 / 16, 9.0 / 16;
  p.damp = RealVector::Zero(3);
  p.amp = CxMatrix::Ones(1, 3);
  CxMatrix X = evaluate_spectral(p, 1, 32);
  HankelGeometry g(1, 32, 16);
  const double kappa = condition_number(X, g, 3);
  CHECK(kappa >= 1.0);
  CHECK(kappa <= 1.2);

  // Scaling the first mode by 10 scales the condition number by about 10.
  p.amp(0, 0) *= 10.0;
  CxMatrix Xill = evaluate_spectral(p, 1, 32);
  const double kappa10 = condition_number(Xill, g, 3);
  CHECK(kappa10 / kappa >= 8.0);
  CHECK(kappa10 / kappa <= 12.0);
}
