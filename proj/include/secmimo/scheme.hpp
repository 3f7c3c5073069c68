#pragma once

#include <cstdint>
#include <random>

#include "secmimo/channel.hpp"
#include "secmimo/config.hpp"

namespace secmimo {

/// One realization of the secure transmit chain in the virtual domain.
struct TransmitFrame {
  ComplexVector s;        ///< confidential symbols, CN(0, I), size m_t
  ComplexVector x_tilde;  ///< precoded signal W s, size m_t
  ComplexVector an;       ///< artificial noise, size n_t - l_t
  ComplexVector x_v;      ///< assembled virtual-domain transmit vector, size n_t
};

/// Expected received interference power fractions behind the leakage
/// experiment: AN power landing on Bob's selected beams and confidential
/// signal power landing on Eve's selected beams, both normalized by P.
struct LeakageReport {
  double an_to_bob = 0.0;
  double info_to_eve = 0.0;
};

/// Draws symbols and AN and assembles the virtual transmit vector:
/// selected dominant beams carry the precoded signal, all nondominant
/// beams carry AN, unselected dominant beams stay silent.
TransmitFrame build_frame(const SystemConfig& cfg,
                          const SparsityPattern& pattern,
                          std::mt19937_64& rng);

/// Bob's detected signal: g_bar x_tilde + g_hat an + thermal noise.
ComplexVector receive_bob(const TransmitFrame& frame,
                          const ChannelSlices& slices,
                          const SystemConfig& cfg, std::mt19937_64& rng);

/// Eve's detected signal: h_bar x_tilde + h_hat an (worst case: her
/// thermal noise is negligible).
ComplexVector receive_eve(const TransmitFrame& frame,
                          const ChannelSlices& slices);

/// Closed-form expected leakage fractions:
///   an_to_bob  = (1-phi) * eta * m_r
///   info_to_eve = phi * (m_e / n_t) * (l_t + eta * (n_t - l_t))
LeakageReport leakage(const SystemConfig& cfg);

/// Monte Carlo estimate of the same quantities over fresh
/// pattern/channel/frame draws; deterministic given seed.
LeakageReport leakage_monte_carlo(const SystemConfig& cfg, long trials,
                                  std::uint64_t seed);

}  // namespace secmimo
