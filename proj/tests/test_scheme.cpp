#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "secmimo/channel.hpp"
#include "secmimo/scheme.hpp"

using namespace secmimo;

TEST_CASE("build_frame places signal and AN on the right beams") {
  SystemConfig cfg = SystemConfig::symmetric(32, 12, 4, 6, 6, 8.0, 1.0, 0.7,
                                             0.1);
  std::mt19937_64 rng(3);
  SparsityPattern p = sample_pattern(cfg, rng);
  TransmitFrame f = build_frame(cfg, p, rng);
  CHECK(f.s.size() == 4);
  CHECK(f.x_tilde.size() == 4);
  CHECK(f.an.size() == cfg.n_t - cfg.l_t);
  CHECK(f.x_v.size() == cfg.n_t);

  // precoder scale
  for (int k = 0; k < 4; ++k)
    CHECK(std::abs(f.x_tilde(k) -
                   std::sqrt(cfg.phi * cfg.power / cfg.m_t) * f.s(k)) < 1e-14);

  std::vector<char> in_ut(cfg.n_t, 0), in_sel(cfg.n_t, 0);
  for (int j : p.u_t) in_ut[j] = 1;
  for (int j : p.u_t_sel) in_sel[j] = 1;
  int k = 0;
  for (int j : p.u_t_sel) CHECK(f.x_v(j) == f.x_tilde(k++));
  for (int j = 0; j < cfg.n_t; ++j) {
    if (in_ut[j] && !in_sel[j]) CHECK(f.x_v(j) == std::complex<double>(0, 0));
    if (!in_ut[j]) CHECK(std::abs(f.x_v(j)) > 0);
  }
}

TEST_CASE("power conservation in expectation") {
  SystemConfig cfg = SystemConfig::symmetric(32, 12, 4, 6, 6, 8.0, 1.0, 0.7,
                                             0.1);
  std::mt19937_64 rng(4);
  double total = 0;
  const int reps = 20000;
  SparsityPattern p = sample_pattern(cfg, rng);
  for (int r = 0; r < reps; ++r) {
    TransmitFrame f = build_frame(cfg, p, rng);
    total += f.x_tilde.squaredNorm() + f.an.squaredNorm();
  }
  CHECK(total / reps == doctest::Approx(cfg.power).epsilon(0.01));
}

TEST_CASE("receive_eve with identity channel and no AN returns x_tilde") {
  SystemConfig cfg = SystemConfig::symmetric(32, 12, 4, 4, 4, 8.0, 1.0, 0.7,
                                             0.1);
  std::mt19937_64 rng(6);
  SparsityPattern p = sample_pattern(cfg, rng);
  TransmitFrame f = build_frame(cfg, p, rng);
  f.an.setZero();
  ChannelSlices s;
  s.h_bar = ComplexMatrix::Identity(4, 4);
  s.h_hat = ComplexMatrix::Zero(4, cfg.n_t - cfg.l_t);
  s.g_bar = s.h_bar;
  s.g_hat = s.h_hat;
  ComplexVector y = receive_eve(f, s);
  CHECK((y - f.x_tilde).norm() < 1e-14);
}

TEST_CASE("receiver dimension checks") {
  SystemConfig cfg = SystemConfig::symmetric(32, 12, 4, 4, 4, 8.0, 1.0, 0.7,
                                             0.1);
  std::mt19937_64 rng(6);
  SparsityPattern p = sample_pattern(cfg, rng);
  TransmitFrame f = build_frame(cfg, p, rng);
  ChannelSlices s;
  s.h_bar = ComplexMatrix::Identity(4, 3);  // wrong signal width
  s.h_hat = ComplexMatrix::Zero(4, cfg.n_t - cfg.l_t);
  CHECK_THROWS_AS(receive_eve(f, s), std::invalid_argument);
  s.g_bar = ComplexMatrix::Identity(4, 4);
  s.g_hat = ComplexMatrix::Zero(5, cfg.n_t - cfg.l_t);  // row mismatch
  CHECK_THROWS_AS(receive_bob(f, s, cfg, rng), std::invalid_argument);
}

TEST_CASE("bob's received covariance matches the model") {
  SystemConfig cfg = SystemConfig::symmetric(24, 8, 2, 3, 3, 4.0, 0.5, 0.6,
                                             0.2);
  std::mt19937_64 rng(8);
  SparsityPattern p = sample_pattern(cfg, rng);
  ChannelSlices s = sample_slices(cfg, p, rng);
  const double c_x = cfg.phi * cfg.power / cfg.m_t;
  const double c_an = (1 - cfg.phi) * cfg.power / (cfg.n_t - cfg.l_t);
  ComplexMatrix expect = c_x * (s.g_bar * s.g_bar.adjoint()) +
                         c_an * (s.g_hat * s.g_hat.adjoint());
  expect.diagonal().array() += cfg.noise_var;

  ComplexMatrix emp = ComplexMatrix::Zero(cfg.m_r, cfg.m_r);
  const int reps = 60000;
  for (int r = 0; r < reps; ++r) {
    TransmitFrame f = build_frame(cfg, p, rng);
    ComplexVector y = receive_bob(f, s, cfg, rng);
    emp += y * y.adjoint();
  }
  emp /= reps;
  CHECK((emp - expect).norm() / expect.norm() < 0.03);
}

TEST_CASE("eve's received covariance matches the model") {
  SystemConfig cfg = SystemConfig::symmetric(24, 8, 2, 3, 3, 4.0, 0.5, 0.6,
                                             0.2);
  std::mt19937_64 rng(9);
  SparsityPattern p = sample_pattern(cfg, rng);
  ChannelSlices s = sample_slices(cfg, p, rng);
  const double c_x = cfg.phi * cfg.power / cfg.m_t;
  const double c_an = (1 - cfg.phi) * cfg.power / (cfg.n_t - cfg.l_t);
  ComplexMatrix expect = c_x * (s.h_bar * s.h_bar.adjoint()) +
                         c_an * (s.h_hat * s.h_hat.adjoint());
  ComplexMatrix emp = ComplexMatrix::Zero(cfg.m_e, cfg.m_e);
  const int reps = 60000;
  for (int r = 0; r < reps; ++r) {
    TransmitFrame f = build_frame(cfg, p, rng);
    ComplexVector y = receive_eve(f, s);
    emp += y * y.adjoint();
  }
  emp /= reps;
  CHECK((emp - expect).norm() / expect.norm() < 0.03);
}

TEST_CASE("eve sees only AN power as phi -> 0") {
  SystemConfig cfg = SystemConfig::symmetric(24, 8, 2, 3, 3, 4.0, 0.5, 1e-9,
                                             0.2);
  std::mt19937_64 rng(10);
  SparsityPattern p = sample_pattern(cfg, rng);
  ChannelSlices s = sample_slices(cfg, p, rng);
  TransmitFrame f = build_frame(cfg, p, rng);
  double sig = (s.h_bar * f.x_tilde).squaredNorm();
  double an = (s.h_hat * f.an).squaredNorm();
  CHECK(sig < 1e-6 * an);
}

TEST_CASE("closed-form leakage limits") {
  SystemConfig cfg;
  cfg.phi = 1.0;
  CHECK(leakage(cfg).an_to_bob == doctest::Approx(0.0));
  cfg.phi = 0.0;
  CHECK(leakage(cfg).info_to_eve == doctest::Approx(0.0));
}

TEST_CASE("leakage monte carlo agrees with the closed forms") {
  // fig-5 style setup, reduced trial count for the unit suite
  SystemConfig cfg = SystemConfig::symmetric(128, 88, 4, 16, 16, 10.0, 1.0,
                                             0.5, 0.1);
  LeakageReport closed = leakage(cfg);
  LeakageReport mc = leakage_monte_carlo(cfg, 3000, 21);
  CHECK(mc.an_to_bob == doctest::Approx(closed.an_to_bob).epsilon(0.03));
  CHECK(mc.info_to_eve == doctest::Approx(closed.info_to_eve).epsilon(0.03));
}

TEST_CASE("leakage trends in phi and eta") {
  SystemConfig cfg = SystemConfig::symmetric(128, 88, 4, 16, 16, 10.0, 1.0,
                                             0.5, 0.1);
  double prev_an = 1e300, prev_info = -1.0;
  for (double phi : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    cfg.phi = phi;
    LeakageReport r = leakage(cfg);
    CHECK(r.an_to_bob <= prev_an);
    CHECK(r.info_to_eve >= prev_info);
    prev_an = r.an_to_bob;
    prev_info = r.info_to_eve;
  }
  cfg.phi = 0.5;
  double prev = -1.0;
  for (double eta : {0.05, 0.1, 0.2, 0.4}) {
    cfg.eta = eta;
    LeakageReport r = leakage(cfg);
    CHECK(r.an_to_bob > prev);
    prev = r.an_to_bob;
  }
}
