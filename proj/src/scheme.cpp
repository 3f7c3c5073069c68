#include "secmimo/scheme.hpp"

#include <cmath>
#include <stdexcept>

namespace secmimo {

TransmitFrame build_frame(const SystemConfig& cfg,
                          const SparsityPattern& pattern,
                          std::mt19937_64& rng) {
  const int n_an = cfg.n_t - cfg.l_t;
  TransmitFrame f;

  f.s.resize(cfg.m_t);
  for (int k = 0; k < cfg.m_t; ++k) f.s(k) = sample_cn(rng, 1.0);
  // W = sqrt(phi P / m_t) I
  f.x_tilde = std::sqrt(cfg.phi * cfg.power / cfg.m_t) * f.s;

  const double an_var = (1.0 - cfg.phi) * cfg.power / n_an;
  f.an.resize(n_an);
  for (int k = 0; k < n_an; ++k) f.an(k) = sample_cn(rng, an_var);

  f.x_v = ComplexVector::Zero(cfg.n_t);
  for (int k = 0; k < cfg.m_t; ++k) f.x_v(pattern.u_t_sel[k]) = f.x_tilde(k);
  std::vector<char> in_ut(cfg.n_t, 0);
  for (int i : pattern.u_t) in_ut[i] = 1;
  int a = 0;
  for (int j = 0; j < cfg.n_t; ++j)
    if (!in_ut[j]) f.x_v(j) = f.an(a++);
  return f;
}

ComplexVector receive_bob(const TransmitFrame& frame,
                          const ChannelSlices& slices,
                          const SystemConfig& cfg, std::mt19937_64& rng) {
  if (slices.g_bar.cols() != frame.x_tilde.size() ||
      slices.g_hat.cols() != frame.an.size() ||
      slices.g_bar.rows() != slices.g_hat.rows())
    throw std::invalid_argument("receive_bob: dimension mismatch");
  ComplexVector y = slices.g_bar * frame.x_tilde + slices.g_hat * frame.an;
  for (Eigen::Index i = 0; i < y.size(); ++i)
    y(i) += sample_cn(rng, cfg.noise_var);
  return y;
}

ComplexVector receive_eve(const TransmitFrame& frame,
                          const ChannelSlices& slices) {
  if (slices.h_bar.cols() != frame.x_tilde.size() ||
      slices.h_hat.cols() != frame.an.size() ||
      slices.h_bar.rows() != slices.h_hat.rows())
    throw std::invalid_argument("receive_eve: dimension mismatch");
  return slices.h_bar * frame.x_tilde + slices.h_hat * frame.an;
}

LeakageReport leakage(const SystemConfig& cfg) {
  LeakageReport r;
  r.an_to_bob = (1.0 - cfg.phi) * cfg.eta * cfg.m_r;
  r.info_to_eve = cfg.phi * (static_cast<double>(cfg.m_e) / cfg.n_t) *
                  (cfg.l_t + cfg.eta * (cfg.n_t - cfg.l_t));
  return r;
}

LeakageReport leakage_monte_carlo(const SystemConfig& cfg, long trials,
                                  std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  double an_sum = 0.0, info_sum = 0.0;
  for (long t = 0; t < trials; ++t) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    SparsityPattern pattern = sample_pattern(cfg, rng);
    ChannelSlices slices = sample_slices(cfg, pattern, rng);
    TransmitFrame frame = build_frame(cfg, pattern, rng);
    an_sum += (slices.g_hat * frame.an).squaredNorm();
    info_sum += (slices.h_bar * frame.x_tilde).squaredNorm();
  }
  LeakageReport r;
  r.an_to_bob = an_sum / trials / cfg.power;
  r.info_to_eve = info_sum / trials / cfg.power;
  return r;
}

}  // namespace secmimo
