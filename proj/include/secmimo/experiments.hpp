#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "secmimo/config.hpp"
#include "secmimo/rates.hpp"

namespace secmimo {

enum class SweepAxis { snr_db, m_t, m_e, l_t, phi, rho, eta };

std::string to_string(SweepAxis a);
SweepAxis sweep_axis_from_string(const std::string& name);

/// One parameter sweep: vary a single axis over a grid and evaluate the
/// requested rate methods at every point.
struct SweepSpec {
  SystemConfig base;
  SweepAxis axis = SweepAxis::snr_db;
  std::vector<double> grid;
  std::vector<RateMethod> methods{RateMethod::theorem1};
  long trials = 1000;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string label;  ///< optional tag echoed into the CSV metadata
};

struct SweepResult {
  std::string meta;                  ///< `key=value;...` echo of the spec
  std::vector<std::string> columns;  ///< first column is the axis
  std::vector<std::vector<double>> rows;
};

/// Applies one axis value to a copy of the base config (snr_db rescales
/// the transmit power against the fixed noise floor; rho maps to the
/// nearest l_t).
SystemConfig apply_axis(const SystemConfig& base, SweepAxis axis, double value);

/// Evaluates spec.methods over spec.grid. Throws std::invalid_argument
/// naming the offending grid point if any point yields an invalid
/// config. Deterministic given the spec, independent of workers.
SweepResult run_sweep(const SweepSpec& spec);

/// Writes `# meta`, a header row, then rows with >= 9 significant
/// digits, LF line endings.
void write_csv(const SweepResult& result, std::ostream& out);
std::string to_csv(const SweepResult& result);

enum class BeamStrategy { random, greedy, exhaustive };

std::string to_string(BeamStrategy s);
BeamStrategy beam_strategy_from_string(const std::string& name);

/// Mean instantaneous secrecy rate when the m_t/m_r/m_e selectors are
/// chosen per strategy from the dominant beams, averaged over
/// trial-matched channel draws. Single-row result with columns
/// mean_r_s, std_err, mean_r_u, mean_c_e.
SweepResult beam_selection_compare(const SystemConfig& cfg, long trials,
                                   std::uint64_t seed, BeamStrategy strategy);

/// Named figure-reproduction presets (fig2..fig10, fig12). Throws
/// std::invalid_argument for an unknown name.
SweepResult figure_preset(const std::string& name, long trials,
                          std::uint64_t seed, int workers = 1);

std::vector<std::string> figure_names();

}  // namespace secmimo
