#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "secmimo/config.hpp"

namespace secmimo {

/// Raised when a config lands outside the regime where an expression is
/// defined (e.g. the Wishart surrogate needs a > m_e, the high-SNR
/// sparsity metric needs rho < 1 - m_r/n_t).
class unsupported_regime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RateMethod {
  monte_carlo,
  theorem1,
  asymptotic_low,
  asymptotic_high,
  bound_low,
  bound_high,
};

std::string to_string(RateMethod m);
RateMethod rate_method_from_string(const std::string& name);

/// Ergodic rate triplet, bits/s/Hz. r_s = [r_u - c_e]^+ always.
struct RateReport {
  double r_u = 0.0;
  double c_e = 0.0;
  double r_s = 0.0;
  RateMethod method = RateMethod::theorem1;
  long trials = 0;        ///< 0 for analytic methods
  double std_err = 0.0;   ///< Monte Carlo only; std error of r_u - c_e
  double std_err_r_u = 0.0;
  double std_err_c_e = 0.0;
  long resampled = 0;     ///< ill-conditioned trials that were redrawn
  std::string note;       ///< non-fatal guardrail warnings
};

/// Scalar sparsity measures and the optimal angle-domain sparsity.
struct SparsityMetrics {
  double chi_l = 0.0;
  double chi_h = 0.0;
  double rho_star = 0.0;
  int l_t_star = 0;
};

struct EveAsymptotic {
  double t1 = 0.0;  ///< capacity through Eve's dominant transmit beams
  double t2 = 0.0;  ///< capacity through her nondominant transmit beams
  double total() const { return t1 + t2; }
};

struct SecrecyBounds {
  double low = 0.0;   ///< low-SNR upper bound on the secrecy rate
  double high = 0.0;  ///< high-SNR upper bound
};

struct ChiDerivatives {
  double d_chi_l_d_rho = 0.0;
  double d_chi_l_d_eta = 0.0;
  double d_chi_h_d_eta = 0.0;
  double d_rho_star_d_eta = 0.0;
};

enum class SnrRegime { low, high };

/// F(x, y) = (sqrt(x(1+sqrt y)^2 + 1) - sqrt(x(1-sqrt y)^2 + 1))^2.
/// Throws std::domain_error for negative input.
double f_functional(double x, double y);

/// AN-to-noise ratio (1-phi) eta P / sigma_n^2 and beam ratio
/// m_r / (n_t - l_t).
double alpha_param(const SystemConfig& cfg);
double beta_param(const SystemConfig& cfg);

/// Moment-matched Wishart surrogate parameters (a, b) for the AN
/// covariance seen by Eve. Throws unsupported_regime when a <= m_e.
std::pair<double, double> wishart_moments(const SystemConfig& cfg);

/// Closed-form ergodic rates in the large-array limit.
RateReport rate_theorem1(const SystemConfig& cfg);

/// Log-det Monte Carlo over fresh pattern/channel realizations.
/// Deterministic given (seed, trials) regardless of worker count.
RateReport rate_monte_carlo(const SystemConfig& cfg, long trials,
                            std::uint64_t seed, int workers = 1);

/// Low/high-SNR closed-form asymptotes for Bob paired with the
/// large-n_t Eve capacity.
RateReport rate_low_snr(const SystemConfig& cfg);
RateReport rate_high_snr(const SystemConfig& cfg);

/// Large-n_t Eve capacity split into dominant/nondominant contributions.
EveAsymptotic eve_asymptotic(const SystemConfig& cfg);

double chi_l(double rho, double eta);
double chi_h(double rho, double eta, int m_r, int n_t);
double rho_star(double eta);

/// All four metric fields for a given sparsity point; l_t_star is
/// round(n_t rho_star) clamped to [m_t, n_t - m_r - 1].
SparsityMetrics chi_metrics(double rho, double eta, const SystemConfig& cfg);

/// Closed-form secrecy-rate upper bounds at the config's own (rho, eta).
/// The individual forms exist so the low bound stays usable where chi_h
/// is undefined.
double bound_low_rate(const SystemConfig& cfg);
double bound_high_rate(const SystemConfig& cfg);
SecrecyBounds bounds(const SystemConfig& cfg);

/// Secrecy-rate gap m_t log2(chi(p1)/chi(p2)) between two sparsity
/// points, chi per regime.
double rate_gap(std::pair<double, double> p1, std::pair<double, double> p2,
                const SystemConfig& cfg, SnrRegime regime);

/// Closed-form derivatives of the sparsity metrics. Throws
/// std::domain_error on boundary inputs.
ChiDerivatives chi_derivatives(double rho, double eta,
                               const SystemConfig& cfg);

/// Second derivative of chi_l in rho; its sign at rho = 1 flips at
/// eta ~ 0.2032.
double chi_l_second_derivative_rho(double rho, double eta);

}  // namespace secmimo
