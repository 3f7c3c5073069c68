#include "secmimo/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "secmimo/channel.hpp"
#include "secmimo/scheme.hpp"

namespace secmimo {

std::string to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::snr_db: return "snr_db";
    case SweepAxis::m_t: return "m_t";
    case SweepAxis::m_e: return "m_e";
    case SweepAxis::l_t: return "l_t";
    case SweepAxis::phi: return "phi";
    case SweepAxis::rho: return "rho";
    case SweepAxis::eta: return "eta";
  }
  return "?";
}

SweepAxis sweep_axis_from_string(const std::string& name) {
  if (name == "snr_db") return SweepAxis::snr_db;
  if (name == "m_t") return SweepAxis::m_t;
  if (name == "m_e") return SweepAxis::m_e;
  if (name == "l_t") return SweepAxis::l_t;
  if (name == "phi") return SweepAxis::phi;
  if (name == "rho") return SweepAxis::rho;
  if (name == "eta") return SweepAxis::eta;
  throw std::invalid_argument("unknown sweep axis: " + name);
}

SystemConfig apply_axis(const SystemConfig& base, SweepAxis axis,
                        double value) {
  SystemConfig cfg = base;
  switch (axis) {
    case SweepAxis::snr_db:
      cfg.power = cfg.noise_var * db_to_linear(value);
      break;
    case SweepAxis::m_t:
      cfg.m_t = static_cast<int>(std::lround(value));
      break;
    case SweepAxis::m_e:
      cfg.m_e = static_cast<int>(std::lround(value));
      break;
    case SweepAxis::l_t:
      cfg.l_t = static_cast<int>(std::lround(value));
      break;
    case SweepAxis::phi:
      cfg.phi = value;
      break;
    case SweepAxis::rho:
      cfg.l_t = static_cast<int>(std::lround(value * cfg.n_t));
      break;
    case SweepAxis::eta:
      cfg.eta = value;
      break;
  }
  return cfg;
}

namespace {

std::string format_meta(const SweepSpec& spec) {
  std::ostringstream m;
  m.precision(17);
  if (!spec.label.empty()) m << "label=" << spec.label << ";";
  m << "axis=" << to_string(spec.axis) << ";grid=";
  for (size_t i = 0; i < spec.grid.size(); ++i)
    m << (i ? "|" : "") << spec.grid[i];
  m << ";methods=";
  for (size_t i = 0; i < spec.methods.size(); ++i)
    m << (i ? "|" : "") << to_string(spec.methods[i]);
  m << ";trials=" << spec.trials << ";seed=" << spec.seed << ";";
  std::string cfg = serialize(spec.base);
  std::replace(cfg.begin(), cfg.end(), '\n', ';');
  m << cfg;
  return m.str();
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.grid.empty())
    throw std::invalid_argument("run_sweep: empty grid");
  for (size_t i = 1; i < spec.grid.size(); ++i)
    if (!(spec.grid[i] > spec.grid[i - 1]))
      throw std::invalid_argument("run_sweep: grid must be strictly increasing");
  if (spec.methods.empty())
    throw std::invalid_argument("run_sweep: no methods requested");

  SweepResult res;
  res.meta = format_meta(spec);
  res.columns.push_back(to_string(spec.axis));
  for (RateMethod m : spec.methods) {
    const std::string p = to_string(m);
    if (m == RateMethod::bound_low || m == RateMethod::bound_high) {
      res.columns.push_back(p);
      continue;
    }
    res.columns.push_back(p + "_r_u");
    res.columns.push_back(p + "_c_e");
    res.columns.push_back(p + "_r_s");
    if (m == RateMethod::monte_carlo) res.columns.push_back(p + "_std_err");
  }

  for (double v : spec.grid) {
    SystemConfig cfg = apply_axis(spec.base, spec.axis, v);
    ValidationReport vr = validate(cfg);
    if (!vr.ok()) {
      std::ostringstream err;
      err << "run_sweep: grid point " << to_string(spec.axis) << "=" << v
          << " yields an invalid config: " << vr.summary();
      throw std::invalid_argument(err.str());
    }
    std::vector<double> row;
    row.push_back(v);
    for (RateMethod m : spec.methods) {
      switch (m) {
        case RateMethod::monte_carlo: {
          RateReport r =
              rate_monte_carlo(cfg, spec.trials, spec.seed, spec.workers);
          row.insert(row.end(), {r.r_u, r.c_e, r.r_s, r.std_err});
          break;
        }
        case RateMethod::theorem1: {
          RateReport r = rate_theorem1(cfg);
          row.insert(row.end(), {r.r_u, r.c_e, r.r_s});
          break;
        }
        case RateMethod::asymptotic_low: {
          RateReport r = rate_low_snr(cfg);
          row.insert(row.end(), {r.r_u, r.c_e, r.r_s});
          break;
        }
        case RateMethod::asymptotic_high: {
          RateReport r = rate_high_snr(cfg);
          row.insert(row.end(), {r.r_u, r.c_e, r.r_s});
          break;
        }
        case RateMethod::bound_low:
          row.push_back(bound_low_rate(cfg));
          break;
        case RateMethod::bound_high:
          row.push_back(bound_high_rate(cfg));
          break;
      }
    }
    res.rows.push_back(std::move(row));
  }
  return res;
}

void write_csv(const SweepResult& result, std::ostream& out) {
  out << "# " << result.meta << "\n";
  for (size_t i = 0; i < result.columns.size(); ++i)
    out << (i ? "," : "") << result.columns[i];
  out << "\n";
  out << std::setprecision(12);
  for (const auto& row : result.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << row[i];
    out << "\n";
  }
}

std::string to_csv(const SweepResult& result) {
  std::ostringstream out;
  write_csv(result, out);
  return out.str();
}

std::string to_string(BeamStrategy s) {
  switch (s) {
    case BeamStrategy::random: return "random";
    case BeamStrategy::greedy: return "greedy";
    case BeamStrategy::exhaustive: return "exhaustive";
  }
  return "?";
}

BeamStrategy beam_strategy_from_string(const std::string& name) {
  if (name == "random") return BeamStrategy::random;
  if (name == "greedy") return BeamStrategy::greedy;
  if (name == "exhaustive") return BeamStrategy::exhaustive;
  throw std::invalid_argument("unknown beam strategy: " + name);
}

namespace {

constexpr double kLog2 = 0.6931471805599453;

// log det of a Hermitian PD matrix via Cholesky.
double logdet_pd(const Eigen::MatrixXcd& m) {
  Eigen::LLT<Eigen::MatrixXcd> llt(m);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("logdet_pd: matrix not positive definite");
  double s = 0.0;
  auto l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < l.rows(); ++i) s += std::log(l(i, i).real());
  return 2.0 * s;
}

// Instantaneous rate log2 det(I + A (B)^-1) for signal covariance A and
// interference covariance B, both Hermitian, B PD.
double inst_rate(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (logdet_pd(b + a) - logdet_pd(b)) / kLog2;
}

Eigen::MatrixXcd take_rows(const Eigen::MatrixXcd& m,
                           const std::vector<int>& rows) {
  Eigen::MatrixXcd out(rows.size(), m.cols());
  for (size_t i = 0; i < rows.size(); ++i) out.row(i) = m.row(rows[i]);
  return out;
}

Eigen::MatrixXcd take_cols(const Eigen::MatrixXcd& m,
                           const std::vector<int>& cols) {
  Eigen::MatrixXcd out(m.rows(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) out.col(j) = m.col(cols[j]);
  return out;
}

// Candidate channel blocks for the selection problem: all dominant rows
// and columns plus the AN-facing complement columns.
struct CandidateBlocks {
  Eigen::MatrixXcd g_dom;       // l_r x l_t, all CN(0,1)
  Eigen::MatrixXcd g_hat_full;  // l_r x (n_t-l_t), CN(0,eta)
  Eigen::MatrixXcd h_dom;       // l_e x l_t, column variance by Eve overlap
  Eigen::MatrixXcd h_hat_full;  // l_e x (n_t-l_t)
};

CandidateBlocks sample_candidates(const SystemConfig& cfg,
                                  const SparsityPattern& p,
                                  std::mt19937_64& rng) {
  const int n_c = cfg.n_t - cfg.l_t;
  std::vector<char> in_et(cfg.n_t, 0);
  for (int i : p.e_t) in_et[i] = 1;
  std::vector<char> in_ut(cfg.n_t, 0);
  for (int i : p.u_t) in_ut[i] = 1;
  std::vector<int> comp;
  comp.reserve(n_c);
  for (int j = 0; j < cfg.n_t; ++j)
    if (!in_ut[j]) comp.push_back(j);

  CandidateBlocks b;
  b.g_dom.resize(cfg.l_r, cfg.l_t);
  for (int i = 0; i < cfg.l_r; ++i)
    for (int j = 0; j < cfg.l_t; ++j) b.g_dom(i, j) = sample_cn(rng, 1.0);
  b.g_hat_full.resize(cfg.l_r, n_c);
  for (int i = 0; i < cfg.l_r; ++i)
    for (int j = 0; j < n_c; ++j) b.g_hat_full(i, j) = sample_cn(rng, cfg.eta);
  b.h_dom.resize(cfg.l_e, cfg.l_t);
  for (int i = 0; i < cfg.l_e; ++i)
    for (int j = 0; j < cfg.l_t; ++j)
      b.h_dom(i, j) = sample_cn(rng, in_et[p.u_t[j]] ? 1.0 : cfg.eta);
  b.h_hat_full.resize(cfg.l_e, n_c);
  for (int i = 0; i < cfg.l_e; ++i)
    for (int j = 0; j < n_c; ++j)
      b.h_hat_full(i, j) = sample_cn(rng, in_et[comp[j]] ? 1.0 : cfg.eta);
  return b;
}

// Positions (within the sorted candidate set) of the selected indices.
std::vector<int> positions_of(const std::vector<int>& selected,
                              const std::vector<int>& candidates) {
  std::vector<int> pos;
  pos.reserve(selected.size());
  for (int v : selected) {
    auto it = std::lower_bound(candidates.begin(), candidates.end(), v);
    pos.push_back(static_cast<int>(it - candidates.begin()));
  }
  return pos;
}

std::vector<int> top_k_by(const std::vector<double>& score, int k) {
  std::vector<int> order(score.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return score[a] > score[b]; });
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

double bob_rate_for(const CandidateBlocks& b, const std::vector<int>& rows,
                    const std::vector<int>& cols, double c_x, double c_an,
                    double noise_var) {
  Eigen::MatrixXcd g_bar = take_cols(take_rows(b.g_dom, rows), cols);
  Eigen::MatrixXcd g_hat = take_rows(b.g_hat_full, rows);
  Eigen::MatrixXcd noise = c_an * (g_hat * g_hat.adjoint());
  noise.diagonal().array() += noise_var;
  return inst_rate(c_x * (g_bar * g_bar.adjoint()), noise);
}

double eve_rate_for(const CandidateBlocks& b, const std::vector<int>& rows,
                    const std::vector<int>& cols, double c_x, double c_an) {
  Eigen::MatrixXcd h_bar = take_cols(take_rows(b.h_dom, rows), cols);
  Eigen::MatrixXcd h_hat = take_rows(b.h_hat_full, rows);
  return inst_rate(c_x * (h_bar * h_bar.adjoint()),
                   c_an * (h_hat * h_hat.adjoint()));
}

// Greedy Eve row selection: grow the set one row at a time, each step
// adding the row that maximizes her instantaneous capacity.
std::vector<int> greedy_eve_rows(const CandidateBlocks& b,
                                 const std::vector<int>& cols, int m_e,
                                 double c_x, double c_an) {
  const int l_e = static_cast<int>(b.h_dom.rows());
  std::vector<int> chosen;
  std::vector<char> used(l_e, 0);
  for (int step = 0; step < m_e; ++step) {
    int best = -1;
    double best_rate = -1.0;
    for (int r = 0; r < l_e; ++r) {
      if (used[r]) continue;
      std::vector<int> trial = chosen;
      trial.push_back(r);
      double rate = eve_rate_for(b, trial, cols, c_x, c_an);
      if (rate > best_rate) {
        best_rate = rate;
        best = r;
      }
    }
    used[best] = 1;
    chosen.push_back(best);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

double n_choose_k(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v *= static_cast<double>(n - k + i) / i;
  return v;
}

struct TrialRates {
  double r_u, c_e;
};

TrialRates beam_trial(const SystemConfig& cfg, std::uint64_t seed,
                      std::uint64_t trial, BeamStrategy strategy) {
  std::mt19937_64 rng(derive_seed(seed, trial));
  SparsityPattern p = sample_pattern(cfg, rng);
  CandidateBlocks b = sample_candidates(cfg, p, rng);
  const double c_x = cfg.phi * cfg.power / cfg.m_t;
  const double c_an = (1.0 - cfg.phi) * cfg.power / (cfg.n_t - cfg.l_t);

  std::vector<int> cols, bob_rows, eve_rows;
  double r_u = 0.0, c_e = 0.0;
  switch (strategy) {
    case BeamStrategy::random: {
      cols = positions_of(p.u_t_sel, p.u_t);
      bob_rows = positions_of(p.u_r_sel, p.u_r);
      eve_rows = positions_of(p.e_r_sel, p.e_r);
      r_u = bob_rate_for(b, bob_rows, cols, c_x, c_an, cfg.noise_var);
      c_e = eve_rate_for(b, eve_rows, cols, c_x, c_an);
      break;
    }
    case BeamStrategy::greedy: {
      std::vector<double> col_energy(cfg.l_t);
      for (int j = 0; j < cfg.l_t; ++j)
        col_energy[j] = b.g_dom.col(j).squaredNorm();
      cols = top_k_by(col_energy, cfg.m_t);
      Eigen::MatrixXcd g_sel = take_cols(b.g_dom, cols);
      std::vector<double> row_energy(cfg.l_r);
      for (int i = 0; i < cfg.l_r; ++i)
        row_energy[i] = g_sel.row(i).squaredNorm();
      bob_rows = top_k_by(row_energy, cfg.m_r);
      eve_rows = greedy_eve_rows(b, cols, cfg.m_e, c_x, c_an);
      r_u = bob_rate_for(b, bob_rows, cols, c_x, c_an, cfg.noise_var);
      c_e = eve_rate_for(b, eve_rows, cols, c_x, c_an);
      break;
    }
    case BeamStrategy::exhaustive: {
      const double combos =
          n_choose_k(cfg.l_t, cfg.m_t) *
          (n_choose_k(cfg.l_r, cfg.m_r) + n_choose_k(cfg.l_e, cfg.m_e));
      if (combos > 1e6)
        throw std::invalid_argument(
            "exhaustive beam selection exceeds the 1e6 combination cap");
      // joint search over Alice's columns and Bob's rows for the best link;
      // Eve then picks her best rows against the chosen columns
      std::vector<int> best_cols;
      std::vector<int> c(cfg.m_t);
      std::iota(c.begin(), c.end(), 0);
      do {
        std::vector<int> rows(cfg.m_r);
        std::iota(rows.begin(), rows.end(), 0);
        do {
          double ru = bob_rate_for(b, rows, c, c_x, c_an, cfg.noise_var);
          if (ru > r_u) {
            r_u = ru;
            best_cols = c;
          }
        } while (next_combination(rows, cfg.l_r));
      } while (next_combination(c, cfg.l_t));
      std::vector<int> erows(cfg.m_e);
      std::iota(erows.begin(), erows.end(), 0);
      do {
        c_e = std::max(c_e, eve_rate_for(b, erows, best_cols, c_x, c_an));
      } while (next_combination(erows, cfg.l_e));
      break;
    }
  }
  return {r_u, c_e};
}

struct BeamSummary {
  double mean_r_s, std_err, mean_r_u, mean_c_e;
};

BeamSummary beam_mean(const SystemConfig& cfg, long trials, std::uint64_t seed,
                      BeamStrategy strategy) {
  require_valid(cfg);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<double> rs(trials), ru(trials), ce(trials);
  for (long t = 0; t < trials; ++t) {
    TrialRates r = beam_trial(cfg, seed, static_cast<std::uint64_t>(t), strategy);
    ru[t] = r.r_u;
    ce[t] = r.c_e;
    rs[t] = std::max(0.0, r.r_u - r.c_e);
  }
  BeamSummary s{0, 0, 0, 0};
  for (long t = 0; t < trials; ++t) {
    s.mean_r_s += rs[t];
    s.mean_r_u += ru[t];
    s.mean_c_e += ce[t];
  }
  s.mean_r_s /= trials;
  s.mean_r_u /= trials;
  s.mean_c_e /= trials;
  if (trials > 1) {
    double var = 0.0;
    for (long t = 0; t < trials; ++t)
      var += (rs[t] - s.mean_r_s) * (rs[t] - s.mean_r_s);
    s.std_err = std::sqrt(var / (trials - 1) / trials);
  }
  return s;
}

}  // namespace

SweepResult beam_selection_compare(const SystemConfig& cfg, long trials,
                                   std::uint64_t seed, BeamStrategy strategy) {
  BeamSummary s = beam_mean(cfg, trials, seed, strategy);
  SweepResult res;
  std::ostringstream m;
  std::string c = serialize(cfg);
  std::replace(c.begin(), c.end(), '\n', ';');
  m << "experiment=beam-selection;strategy=" << to_string(strategy)
    << ";trials=" << trials << ";seed=" << seed << ";" << c;
  res.meta = m.str();
  res.columns = {"mean_r_s", "std_err", "mean_r_u", "mean_c_e"};
  res.rows = {{s.mean_r_s, s.std_err, s.mean_r_u, s.mean_c_e}};
  return res;
}

namespace {

// Merge several same-grid sweeps into one table, prefixing each
// family's value columns with its label.
SweepResult merge_families(
    const std::string& meta, const std::string& axis_name,
    const std::vector<double>& grid,
    const std::vector<std::pair<std::string, SweepResult>>& families) {
  SweepResult out;
  out.meta = meta;
  out.columns.push_back(axis_name);
  for (const auto& [label, fam] : families)
    for (size_t c = 1; c < fam.columns.size(); ++c)
      out.columns.push_back(label + "_" + fam.columns[c]);
  for (size_t r = 0; r < grid.size(); ++r) {
    std::vector<double> row{grid[r]};
    for (const auto& [label, fam] : families)
      row.insert(row.end(), fam.rows[r].begin() + 1, fam.rows[r].end());
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<double> linspace_step(double lo, double hi, double step) {
  std::vector<double> g;
  for (double v = lo; v <= hi + 1e-9; v += step) g.push_back(v);
  return g;
}

std::string preset_meta(const std::string& name, long trials,
                        std::uint64_t seed, const SystemConfig& base) {
  std::ostringstream m;
  std::string c = serialize(base);
  std::replace(c.begin(), c.end(), '\n', ';');
  m << "figure=" << name << ";trials=" << trials << ";seed=" << seed << ";"
    << c;
  return m.str();
}

SweepResult fig2(long trials, std::uint64_t seed, int workers) {
  SystemConfig base =
      SystemConfig::symmetric(128, 28, 4, 16, 16, 10.0, 1.0, 0.6, 0.1);
  std::vector<double> grid = linspace_step(-10, 40, 5);
  std::vector<std::pair<std::string, SweepResult>> fams;
  for (int lt : {28, 48, 88}) {
    SweepSpec s;
    s.base = base;
    s.base.l_t = lt;
    s.axis = SweepAxis::snr_db;
    s.grid = grid;
    s.methods = {RateMethod::monte_carlo, RateMethod::theorem1};
    s.trials = trials;
    s.seed = seed;
    s.workers = workers;
    fams.emplace_back("lt" + std::to_string(lt), run_sweep(s));
  }
  return merge_families(preset_meta("fig2", trials, seed, base), "snr_db",
                        grid, fams);
}

SweepResult fig3(long trials, std::uint64_t seed, int workers) {
  SystemConfig base =
      SystemConfig::symmetric(256, 28, 4, 20, 20, 1.0, 1.0, 0.6, 0.1);
  std::vector<double> grid{2, 4, 8, 12, 16, 20};
  std::vector<std::pair<std::string, SweepResult>> fams;
  for (int db : {6, 7, 8}) {
    SweepSpec s;
    s.base = base;
    s.base.power = db_to_linear(db);
    s.axis = SweepAxis::m_t;
    s.grid = grid;
    s.methods = {RateMethod::monte_carlo, RateMethod::theorem1};
    s.trials = trials;
    s.seed = seed;
    s.workers = workers;
    fams.emplace_back("g" + std::to_string(db) + "db", run_sweep(s));
  }
  return merge_families(preset_meta("fig3", trials, seed, base), "m_t", grid,
                        fams);
}

SweepResult fig4(long trials, std::uint64_t seed, int workers) {
  SystemConfig base =
      SystemConfig::symmetric(256, 28, 4, 16, 4, 1.0, 1.0, 0.6, 0.1);
  std::vector<double> grid{4, 8, 12, 16, 20, 24};
  std::vector<std::pair<std::string, SweepResult>> fams;
  for (int db : {6, 7, 8}) {
    SweepSpec s;
    s.base = base;
    s.base.power = db_to_linear(db);
    s.axis = SweepAxis::m_e;
    s.grid = grid;
    s.methods = {RateMethod::monte_carlo, RateMethod::theorem1};
    s.trials = trials;
    s.seed = seed;
    s.workers = workers;
    fams.emplace_back("g" + std::to_string(db) + "db", run_sweep(s));
  }
  return merge_families(preset_meta("fig4", trials, seed, base), "m_e", grid,
                        fams);
}

SweepResult fig5(long trials, std::uint64_t seed) {
  SystemConfig base =
      SystemConfig::symmetric(128, 88, 4, 16, 16, 10.0, 1.0, 0.5, 0.1);
  std::vector<double> grid = linspace_step(0.05, 0.95, 0.05);
  SweepResult res;
  res.meta = preset_meta("fig5", trials, seed, base);
  res.columns = {"phi", "an_to_bob", "an_to_bob_mc", "info_to_eve",
                 "info_to_eve_mc"};
  for (double phi : grid) {
    SystemConfig cfg = base;
    cfg.phi = phi;
    LeakageReport closed = leakage(cfg);
    LeakageReport mc = leakage_monte_carlo(cfg, trials, seed);
    res.rows.push_back(
        {phi, closed.an_to_bob, mc.an_to_bob, closed.info_to_eve,
         mc.info_to_eve});
  }
  return res;
}

SweepResult fig6(long trials, std::uint64_t seed) {
  SystemConfig base =
      SystemConfig::symmetric(128, 40, 32, 32, 32, 1.0, 1.0, 0.6, 0.1);
  std::vector<double> grid = linspace_step(-10, 20, 5);
  SweepResult res;
  res.meta = preset_meta("fig6", trials, seed, base);
  res.columns = {"snr_db",       "random_r_s",  "random_std_err",
                 "greedy_r_s",   "greedy_std_err"};
  for (double db : grid) {
    SystemConfig cfg = base;
    cfg.power = cfg.noise_var * db_to_linear(db);
    BeamSummary rnd = beam_mean(cfg, trials, seed, BeamStrategy::random);
    BeamSummary grd = beam_mean(cfg, trials, seed, BeamStrategy::greedy);
    res.rows.push_back({db, rnd.mean_r_s, rnd.std_err, grd.mean_r_s,
                        grd.std_err});
  }
  return res;
}

SweepResult fig7(long trials, std::uint64_t seed, int workers) {
  (void)trials;
  (void)workers;
  SystemConfig base =
      SystemConfig::symmetric(512, 160, 4, 96, 16, db_to_linear(2.0), 1.0,
                              0.9, 0.1);
  SweepSpec s;
  s.base = base;
  s.axis = SweepAxis::l_t;
  s.grid = linspace_step(48, 480, 16);
  s.methods = {RateMethod::theorem1, RateMethod::bound_low};
  s.trials = trials;
  s.seed = seed;
  s.label = "fig7";
  SweepResult res = run_sweep(s);
  res.meta = preset_meta("fig7", trials, seed, base);
  return res;
}

SweepResult fig8(long trials, std::uint64_t seed) {
  SystemConfig base =
      SystemConfig::symmetric(512, 160, 4, 32, 8, db_to_linear(30.0), 1.0,
                              0.6, 0.1);
  SweepSpec s;
  s.base = base;
  s.axis = SweepAxis::l_t;
  s.grid = linspace_step(48, 480, 16);
  s.methods = {RateMethod::theorem1, RateMethod::bound_high};
  s.trials = trials;
  s.seed = seed;
  s.label = "fig8";
  SweepResult res = run_sweep(s);
  res.meta = preset_meta("fig8", trials, seed, base);
  return res;
}

SweepResult fig9(long trials, std::uint64_t seed) {
  SystemConfig base =
      SystemConfig::symmetric(512, 224, 4, 192, 16, 1.0, 1.0, 0.9, 0.1);
  std::vector<double> grid = linspace_step(48, 320, 16);
  std::vector<std::pair<std::string, SweepResult>> fams;
  for (int db : {2, 5}) {
    SweepSpec s;
    s.base = base;
    s.base.power = db_to_linear(db);
    s.axis = SweepAxis::l_t;
    s.grid = grid;
    s.methods = {RateMethod::theorem1, RateMethod::bound_low};
    s.trials = trials;
    s.seed = seed;
    fams.emplace_back("g" + std::to_string(db) + "db", run_sweep(s));
  }
  return merge_families(preset_meta("fig9", trials, seed, base), "l_t", grid,
                        fams);
}

SweepResult fig10(long trials, std::uint64_t seed) {
  SystemConfig base =
      SystemConfig::symmetric(512, 165, 4, 32, 12, db_to_linear(25.0), 1.0,
                              0.5, 0.1);
  SweepSpec s;
  s.base = base;
  s.axis = SweepAxis::phi;
  s.grid = linspace_step(0.1, 0.9, 0.05);
  s.methods = {RateMethod::theorem1, RateMethod::bound_high};
  s.trials = trials;
  s.seed = seed;
  s.label = "fig10";
  SweepResult res = run_sweep(s);
  res.meta = preset_meta("fig10", trials, seed, base);
  return res;
}

SweepResult fig12(long trials, std::uint64_t seed) {
  SystemConfig base =
      SystemConfig::symmetric(512, 224, 4, 192, 16, 1.0, 1.0, 0.9, 0.1);
  std::vector<double> grid = linspace_step(0.10, 0.60, 0.05);
  std::vector<std::pair<std::string, SweepResult>> fams;
  for (double eta : {0.1, 0.2, 0.4}) {
    for (int db : {2, 5}) {
      SweepSpec s;
      s.base = base;
      s.base.eta = eta;
      s.base.power = db_to_linear(db);
      s.axis = SweepAxis::rho;
      s.grid = grid;
      s.methods = {RateMethod::theorem1};
      s.trials = trials;
      s.seed = seed;
      std::ostringstream label;
      label << "eta" << eta << "_g" << db << "db";
      fams.emplace_back(label.str(), run_sweep(s));
    }
  }
  return merge_families(preset_meta("fig12", trials, seed, base), "rho", grid,
                        fams);
}

}  // namespace

std::vector<std::string> figure_names() {
  return {"fig2", "fig3", "fig4",  "fig5", "fig6",
          "fig7", "fig8", "fig9", "fig10", "fig12"};
}

SweepResult figure_preset(const std::string& name, long trials,
                          std::uint64_t seed, int workers) {
  if (name == "fig2") return fig2(trials, seed, workers);
  if (name == "fig3") return fig3(trials, seed, workers);
  if (name == "fig4") return fig4(trials, seed, workers);
  if (name == "fig5") return fig5(trials, seed);
  if (name == "fig6") return fig6(trials, seed);
  if (name == "fig7") return fig7(trials, seed, workers);
  if (name == "fig8") return fig8(trials, seed);
  if (name == "fig9") return fig9(trials, seed);
  if (name == "fig10") return fig10(trials, seed);
  if (name == "fig12") return fig12(trials, seed);
  throw std::invalid_argument("unknown figure preset: " + name);
}

}  // namespace secmimo
