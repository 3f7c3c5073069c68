#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace secmimo {

/// Full system parameterization shared by every other module.
///
/// Antenna counts (n_*), RF-chain counts (m_*) and dominant-beam counts
/// (l_*) for the transmitter, the legitimate receiver, and the
/// eavesdropper, plus the power split and the two sparsity parameters.
/// All powers are linear watts.
struct SystemConfig {
  int n_t = 128;  ///< transmit antennas
  int n_r = 128;  ///< legitimate-receiver antennas
  int n_e = 128;  ///< eavesdropper antennas
  int m_t = 4;    ///< transmit RF chains
  int m_r = 16;   ///< legitimate-receiver RF chains
  int m_e = 16;   ///< eavesdropper RF chains
  int l_t = 28;   ///< dominant transmit beams
  int l_r = 28;   ///< dominant receive beams (legitimate)
  int l_e = 28;   ///< dominant receive beams (eavesdropper)
  double power = 10.0;     ///< total transmit power P
  double noise_var = 1.0;  ///< legitimate receiver noise variance
  double phi = 0.6;        ///< fraction of P on the confidential signal
  double eta = 0.1;        ///< nondominant-to-dominant beam variance ratio

  /// Symmetric shorthand used throughout the numerical experiments:
  /// all three terminals share the antenna count and the dominant-beam
  /// count.
  static SystemConfig symmetric(int n, int l, int m_t, int m_r, int m_e,
                                double power, double noise_var, double phi,
                                double eta);

  /// Fraction of dominant transmit beams, l_t / n_t.
  double rho() const { return static_cast<double>(l_t) / n_t; }

  /// System SNR, power / noise_var (linear).
  double snr() const { return power / noise_var; }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks every structural invariant of the config. Pure; never throws.
ValidationReport validate(const SystemConfig& cfg);

/// Throws std::invalid_argument listing all violations if validate fails.
void require_valid(const SystemConfig& cfg);

/// Parses a flat key=value config file. Blank lines and lines starting
/// with '#' are ignored; unknown keys are errors.
SystemConfig parse_config_text(std::string_view text);
SystemConfig load_config_file(const std::string& path);

/// Applies a single "key=value" override in place. Unknown keys throw.
void apply_override(SystemConfig& cfg, std::string_view assignment);

/// Serializes in the same key=value format accepted by the parser.
std::string serialize(const SystemConfig& cfg);

/// dB <-> linear helpers used at the CLI boundary; everything internal
/// is linear.
double db_to_linear(double db);
double linear_to_db(double linear);

}  // namespace secmimo
