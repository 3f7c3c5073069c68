#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "secmimo/config.hpp"

namespace secmimo {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Index sets of dominant beams plus the RF-chain selectors, all sorted
/// and 0-based.
struct SparsityPattern {
  std::vector<int> u_t;  ///< dominant transmit beams of G, size l_t
  std::vector<int> u_r;  ///< dominant receive beams of G, size l_r
  std::vector<int> e_t;  ///< dominant transmit beams of H, size l_t
  std::vector<int> e_r;  ///< dominant receive beams of H, size l_e
  std::vector<int> u_t_sel;  ///< selected transmit beams, size m_t
  std::vector<int> u_r_sel;  ///< selected receive beams (Bob), size m_r
  std::vector<int> e_r_sel;  ///< selected receive beams (Eve), size m_e
};

/// Realized virtual channels for Bob (g, n_r x n_t) and Eve (h, n_e x n_t).
struct VirtualChannelPair {
  ComplexMatrix g;
  ComplexMatrix h;
  SparsityPattern pattern;
  double eta = 0.0;
};

/// The four working submatrices of the transmission chain:
/// g_bar (m_r x m_t), g_hat (m_r x (n_t-l_t)),
/// h_bar (m_e x m_t), h_hat (m_e x (n_t-l_t)).
struct ChannelSlices {
  ComplexMatrix g_bar, g_hat, h_bar, h_hat;
};

/// splitmix64 of (base ^ index); used to derive independent per-trial
/// generator seeds from a single experiment seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// One complex Gaussian draw CN(0, var).
std::complex<double> sample_cn(std::mt19937_64& rng, double var);

SparsityPattern sample_pattern(const SystemConfig& cfg, std::mt19937_64& rng);
SparsityPattern sample_pattern(const SystemConfig& cfg, std::uint64_t seed);

VirtualChannelPair sample_channels(const SystemConfig& cfg,
                                   const SparsityPattern& pattern,
                                   std::mt19937_64& rng);
VirtualChannelPair sample_channels(const SystemConfig& cfg,
                                   const SparsityPattern& pattern,
                                   std::uint64_t seed);

/// Extracts the four submatrices from full channel realizations.
/// Throws std::invalid_argument on dimension mismatch.
ChannelSlices slice(const VirtualChannelPair& pair);

/// Samples the four submatrices directly with the variance structure
/// implied by the pattern, without materializing the full n x n
/// channels. Statistically identical to sample_channels + slice; used
/// by the Monte Carlo trial loop.
ChannelSlices sample_slices(const SystemConfig& cfg,
                            const SparsityPattern& pattern,
                            std::mt19937_64& rng);

/// Unitary DFT-type array response matrix on the uniform spatial-angle
/// grid, columns a(theta_j)/sqrt(n).
ComplexMatrix steering_matrix(int n, double spacing_ratio = 0.5);

/// AOD/AOA grid angles arcsin(spatial_angle / spacing_ratio), radians.
/// Reporting only; the rate math never consumes them.
std::vector<double> grid_angles(int n, double spacing_ratio = 0.5);

/// Debug dump, one row per entry: i,j,re,im.
void dump_matrix_csv(const ComplexMatrix& m, std::ostream& out);

}  // namespace secmimo
