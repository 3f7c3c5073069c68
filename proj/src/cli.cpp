#include "secmimo/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "secmimo/config.hpp"
#include "secmimo/experiments.hpp"
#include "secmimo/rates.hpp"
#include "secmimo/scheme.hpp"

namespace secmimo {

namespace {

int default_workers() {
  if (const char* env = std::getenv("SECMIMO_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<std::string> snr;  // linear, or dB with a "db" suffix
  long trials = 1000;
  unsigned long long seed = kDefaultSeed;
  int workers = default_workers();
  std::string out_path;

  // direct field flags, applied after --set overrides
  std::optional<int> n_t, n_r, n_e, m_t, m_r, m_e, l_t, l_r, l_e;
  std::optional<double> power, noise_var, phi, eta;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "key=value config file");
  cmd->add_option("--set", o.overrides, "override key=value (repeatable)");
  cmd->add_option("--n-t", o.n_t, "transmit antennas");
  cmd->add_option("--n-r", o.n_r, "legitimate-receiver antennas");
  cmd->add_option("--n-e", o.n_e, "eavesdropper antennas");
  cmd->add_option("--m-t", o.m_t, "transmit RF chains");
  cmd->add_option("--m-r", o.m_r, "legitimate-receiver RF chains");
  cmd->add_option("--m-e", o.m_e, "eavesdropper RF chains");
  cmd->add_option("--l-t", o.l_t, "dominant transmit beams");
  cmd->add_option("--l-r", o.l_r, "dominant receive beams (Bob)");
  cmd->add_option("--l-e", o.l_e, "dominant receive beams (Eve)");
  cmd->add_option("--power", o.power, "transmit power (linear)");
  cmd->add_option("--noise-var", o.noise_var, "noise variance (linear)");
  cmd->add_option("--phi", o.phi, "signal power fraction");
  cmd->add_option("--eta", o.eta, "nondominant variance ratio");
  cmd->add_option("--snr", o.snr,
                  "target SNR; linear, or dB with a 'db' suffix (sets power "
                  "against noise-var)");
  cmd->add_option("--trials", o.trials, "Monte Carlo trials");
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--workers", o.workers,
                  "worker threads (default $SECMIMO_WORKERS or 1)");
  cmd->add_option("--out", o.out_path, "write CSV here instead of stdout");
}

double parse_snr(const std::string& text) {
  std::string t = text;
  bool db = false;
  if (t.size() >= 2) {
    std::string tail = t.substr(t.size() - 2);
    for (char& c : tail) c = static_cast<char>(std::tolower(c));
    if (tail == "db") {
      db = true;
      t = t.substr(0, t.size() - 2);
    }
  }
  size_t used = 0;
  double v = std::stod(t, &used);
  if (used != t.size())
    throw std::invalid_argument("bad --snr value: " + text);
  return db ? db_to_linear(v) : v;
}

SystemConfig build_config(const CommonOpts& o) {
  SystemConfig cfg;
  if (!o.config_path.empty()) cfg = load_config_file(o.config_path);
  for (const auto& kv : o.overrides) apply_override(cfg, kv);
  auto set_i = [](std::optional<int> v, int& dst) { if (v) dst = *v; };
  auto set_d = [](std::optional<double> v, double& dst) { if (v) dst = *v; };
  set_i(o.n_t, cfg.n_t);
  set_i(o.n_r, cfg.n_r);
  set_i(o.n_e, cfg.n_e);
  set_i(o.m_t, cfg.m_t);
  set_i(o.m_r, cfg.m_r);
  set_i(o.m_e, cfg.m_e);
  set_i(o.l_t, cfg.l_t);
  set_i(o.l_r, cfg.l_r);
  set_i(o.l_e, cfg.l_e);
  set_d(o.power, cfg.power);
  set_d(o.noise_var, cfg.noise_var);
  set_d(o.phi, cfg.phi);
  set_d(o.eta, cfg.eta);
  if (o.snr) cfg.power = cfg.noise_var * parse_snr(*o.snr);
  return cfg;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    double lo, step, hi;
    char c1, c2;
    std::istringstream ss(text);
    if (!(ss >> lo >> c1 >> step >> c2 >> hi) || c1 != ':' || c2 != ':' ||
        step <= 0)
      throw std::invalid_argument("bad grid (want lo:step:hi): " + text);
    for (double v = lo; v <= hi + 1e-9; v += step) grid.push_back(v);
  } else {
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) grid.push_back(std::stod(item));
  }
  if (grid.empty()) throw std::invalid_argument("empty grid: " + text);
  return grid;
}

void emit_csv(const SweepResult& res, const CommonOpts& o, std::ostream& out,
              std::ostream& err) {
  if (o.out_path.empty()) {
    write_csv(res, out);
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + o.out_path);
  write_csv(res, f);
  err << "wrote " << res.rows.size() << " rows to " << o.out_path << "\n";
}

void print_report(const RateReport& r, std::ostream& out) {
  out << std::setprecision(12);
  out << "method = " << to_string(r.method) << "\n";
  out << "r_u = " << r.r_u << "\n";
  out << "c_e = " << r.c_e << "\n";
  out << "r_s = " << r.r_s << "\n";
  if (r.method == RateMethod::monte_carlo) {
    out << "trials = " << r.trials << "\n";
    out << "std_err = " << r.std_err << "\n";
    out << "resampled = " << r.resampled << "\n";
  }
  if (!r.note.empty()) out << "note: " << r.note << "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"secure sparse mm-wave MIMO rate toolkit"};
  app.require_subcommand(1);

  CommonOpts o;

  auto* c_validate = app.add_subcommand("validate", "check a config");
  add_common(c_validate, o);

  auto* c_rate = app.add_subcommand("rate", "ergodic rates for one config");
  add_common(c_rate, o);
  std::string method = "theorem1";
  c_rate->add_option("--method", method,
                     "monte-carlo|theorem1|asymptotic-low|asymptotic-high");

  auto* c_bounds = app.add_subcommand("bounds", "secrecy-rate upper bounds");
  add_common(c_bounds, o);

  auto* c_metrics = app.add_subcommand("metrics", "sparsity metrics");
  add_common(c_metrics, o);
  std::optional<double> rho_opt, eta_opt;
  c_metrics->add_option("--rho", rho_opt, "sparsity rho (default l_t/n_t)");
  c_metrics->add_option("--metric-eta", eta_opt,
                        "eta for the metrics (default config eta)");

  auto* c_sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  add_common(c_sweep, o);
  std::string axis = "snr_db";
  std::string grid_text;
  std::vector<std::string> method_names{"theorem1"};
  c_sweep->add_option("--axis", axis, "snr_db|m_t|m_e|l_t|phi|rho|eta");
  c_sweep->add_option("--grid", grid_text, "lo:step:hi or v1,v2,...")
      ->required();
  c_sweep->add_option("--methods", method_names,
                      "rate methods to evaluate (repeatable)");

  auto* c_figure = app.add_subcommand("figure", "figure-reproduction presets");
  add_common(c_figure, o);
  std::string fig_name;
  c_figure->add_option("name", fig_name, "one of: fig2..fig10, fig12");
  bool fig_list = false;
  c_figure->add_flag("--list", fig_list, "list preset names");

  auto* c_leakage = app.add_subcommand("leakage", "leakage power fractions");
  add_common(c_leakage, o);

  std::vector<const char*> argv;
  argv.push_back("secmimo");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  if (c_validate->parsed()) {
    SystemConfig cfg = build_config(o);
    ValidationReport r = validate(cfg);
    if (r.ok()) {
      out << "ok\n";
      return 0;
    }
    err << "invalid config: " << r.summary() << "\n";
    return 2;
  }

  if (c_rate->parsed()) {
    SystemConfig cfg = build_config(o);
    RateMethod m = rate_method_from_string(method);
    RateReport r;
    switch (m) {
      case RateMethod::monte_carlo:
        r = rate_monte_carlo(cfg, o.trials, o.seed, o.workers);
        break;
      case RateMethod::theorem1:
        r = rate_theorem1(cfg);
        break;
      case RateMethod::asymptotic_low:
        r = rate_low_snr(cfg);
        break;
      case RateMethod::asymptotic_high:
        r = rate_high_snr(cfg);
        break;
      default:
        throw std::invalid_argument(
            "rate --method expects monte-carlo, theorem1, asymptotic-low or "
            "asymptotic-high");
    }
    print_report(r, out);
    return 0;
  }

  if (c_bounds->parsed()) {
    SystemConfig cfg = build_config(o);
    SecrecyBounds b = bounds(cfg);
    out << std::setprecision(12);
    out << "bound_low = " << b.low << "\n";
    out << "bound_high = " << b.high << "\n";
    return 0;
  }

  if (c_metrics->parsed()) {
    SystemConfig cfg = build_config(o);
    double rho = rho_opt.value_or(cfg.rho());
    double eta = eta_opt.value_or(cfg.eta);
    SparsityMetrics m = chi_metrics(rho, eta, cfg);
    out << std::setprecision(12);
    out << "chi_l = " << m.chi_l << "\n";
    out << "chi_h = " << m.chi_h << "\n";
    out << "rho_star = " << m.rho_star << "\n";
    out << "l_t_star = " << m.l_t_star << "\n";
    return 0;
  }

  if (c_sweep->parsed()) {
    SweepSpec spec;
    spec.base = build_config(o);
    spec.axis = sweep_axis_from_string(axis);
    spec.grid = parse_grid(grid_text);
    spec.methods.clear();
    for (const auto& name : method_names)
      spec.methods.push_back(rate_method_from_string(name));
    spec.trials = o.trials;
    spec.seed = o.seed;
    spec.workers = o.workers;
    emit_csv(run_sweep(spec), o, out, err);
    return 0;
  }

  if (c_figure->parsed()) {
    if (fig_list) {
      for (const auto& n : figure_names()) out << n << "\n";
      return 0;
    }
    if (fig_name.empty()) {
      err << "usage error: figure needs a preset name (see --list)\n";
      return 1;
    }
    emit_csv(figure_preset(fig_name, o.trials, o.seed, o.workers), o, out,
             err);
    return 0;
  }

  if (c_leakage->parsed()) {
    SystemConfig cfg = build_config(o);
    require_valid(cfg);
    LeakageReport closed = leakage(cfg);
    LeakageReport mc = leakage_monte_carlo(cfg, o.trials, o.seed);
    out << std::setprecision(12);
    out << "an_to_bob = " << closed.an_to_bob << "\n";
    out << "an_to_bob_mc = " << mc.an_to_bob << "\n";
    out << "info_to_eve = " << closed.info_to_eve << "\n";
    out << "info_to_eve_mc = " << mc.info_to_eve << "\n";
    return 0;
  }

  err << "usage error: no subcommand\n";
  return 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const unsupported_regime& e) {
    err << "unsupported regime: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    err << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace secmimo
