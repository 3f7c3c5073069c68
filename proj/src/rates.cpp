#include "secmimo/rates.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "secmimo/channel.hpp"

namespace secmimo {

namespace {

constexpr double kLog2 = 0.6931471805599453;  // ln 2
constexpr double kMaxCondition = 1e12;

double log2_of(double x) { return std::log2(x); }

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace

std::string to_string(RateMethod m) {
  switch (m) {
    case RateMethod::monte_carlo: return "monte-carlo";
    case RateMethod::theorem1: return "theorem1";
    case RateMethod::asymptotic_low: return "asymptotic-low";
    case RateMethod::asymptotic_high: return "asymptotic-high";
    case RateMethod::bound_low: return "bound-low";
    case RateMethod::bound_high: return "bound-high";
  }
  return "?";
}

RateMethod rate_method_from_string(const std::string& name) {
  if (name == "monte-carlo" || name == "mc") return RateMethod::monte_carlo;
  if (name == "theorem1") return RateMethod::theorem1;
  if (name == "asymptotic-low" || name == "low") return RateMethod::asymptotic_low;
  if (name == "asymptotic-high" || name == "high") return RateMethod::asymptotic_high;
  if (name == "bound-low") return RateMethod::bound_low;
  if (name == "bound-high") return RateMethod::bound_high;
  throw std::invalid_argument("unknown rate method: " + name);
}

double f_functional(double x, double y) {
  if (x < 0.0 || y < 0.0)
    throw std::domain_error("f_functional: arguments must be nonnegative");
  const double sy = std::sqrt(y);
  const double lhs = std::sqrt(x * (1.0 + sy) * (1.0 + sy) + 1.0);
  const double rhs = std::sqrt(x * (1.0 - sy) * (1.0 - sy) + 1.0);
  const double d = lhs - rhs;
  return d * d;
}

double alpha_param(const SystemConfig& cfg) {
  return (1.0 - cfg.phi) * cfg.eta * cfg.power / cfg.noise_var;
}

double beta_param(const SystemConfig& cfg) {
  return static_cast<double>(cfg.m_r) / (cfg.n_t - cfg.l_t);
}

std::pair<double, double> wishart_moments(const SystemConfig& cfg) {
  const double n_t = cfg.n_t, l_t = cfg.l_t, eta = cfg.eta;
  const double dom = l_t + eta * (n_t - l_t);
  const double dom2 = l_t + eta * eta * (n_t - l_t);
  const double a = dom * dom * (n_t - l_t) / (n_t * dom2);
  const double b = dom2 / dom;
  if (a <= cfg.m_e)
    throw unsupported_regime(
        "wishart surrogate degrees of freedom a <= m_e; Eve's capacity is "
        "undefined for this config");
  return {a, b};
}

namespace {

double bob_rate_closed_form(const SystemConfig& cfg) {
  const double alpha = alpha_param(cfg);
  const double beta = beta_param(cfg);
  const double shrink = 1.0 - f_functional(alpha, beta) / (4.0 * alpha * beta);
  return cfg.m_t *
         log2_of(1.0 + cfg.m_r * cfg.phi * cfg.power /
                           (cfg.m_t * cfg.noise_var) * shrink);
}

double eve_capacity_closed_form(const SystemConfig& cfg) {
  auto [a, b] = wishart_moments(cfg);
  const double n_t = cfg.n_t, l_t = cfg.l_t;
  const double gain =
      cfg.phi * (n_t - l_t) * cfg.m_e / ((1.0 - cfg.phi) * cfg.m_t * (a - cfg.m_e) * b);
  return (l_t * cfg.m_t / n_t) * log2_of(1.0 + gain) +
         ((n_t - l_t) * cfg.m_t / n_t) * log2_of(1.0 + gain * cfg.eta);
}

}  // namespace

RateReport rate_theorem1(const SystemConfig& cfg) {
  require_valid(cfg);
  RateReport r;
  r.method = RateMethod::theorem1;
  r.r_u = bob_rate_closed_form(cfg);
  r.c_e = eve_capacity_closed_form(cfg);
  r.r_s = positive_part(r.r_u - r.c_e);
  return r;
}

namespace {

// log det of a Hermitian positive-definite matrix together with its
// condition number. Eigendecomposition keeps the conditioning check and
// the determinant on the same factorization.
struct LogDet {
  double value;  // natural log
  double cond;
};

LogDet logdet_hermitian(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m,
                                                     Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double lo = ev.minCoeff();
  const double hi = ev.maxCoeff();
  LogDet out;
  out.cond = (lo > 0.0) ? hi / lo : std::numeric_limits<double>::infinity();
  out.value = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    out.value += std::log(ev(i));
  return out;
}

struct TrialResult {
  double r_u;
  double c_e;
  long resampled;
};

// One Monte Carlo realization of both log-det rates. Ill-conditioned
// draws (finite-precision stand-in for the almost-sure invertibility
// assumption) are redrawn with a fresh derived seed.
TrialResult run_trial(const SystemConfig& cfg, std::uint64_t seed,
                      std::uint64_t trial) {
  TrialResult out{0.0, 0.0, 0};
  const double c_x = cfg.phi * cfg.power / cfg.m_t;
  const double c_an = (1.0 - cfg.phi) * cfg.power / (cfg.n_t - cfg.l_t);

  for (long retry = 0;; ++retry) {
    std::uint64_t idx = trial + (static_cast<std::uint64_t>(retry) << 40);
    std::mt19937_64 rng(derive_seed(seed, idx));
    SparsityPattern pattern = sample_pattern(cfg, rng);
    ChannelSlices s = sample_slices(cfg, pattern, rng);

    Eigen::MatrixXcd noise_cov =
        c_an * (s.g_hat * s.g_hat.adjoint());
    noise_cov.diagonal().array() += cfg.noise_var;
    Eigen::MatrixXcd total_cov =
        noise_cov + c_x * (s.g_bar * s.g_bar.adjoint());

    Eigen::MatrixXcd eve_noise = c_an * (s.h_hat * s.h_hat.adjoint());
    Eigen::MatrixXcd eve_total =
        eve_noise + c_x * (s.h_bar * s.h_bar.adjoint());

    LogDet ln = logdet_hermitian(noise_cov);
    LogDet lt = logdet_hermitian(total_cov);
    LogDet en = logdet_hermitian(eve_noise);
    LogDet et = logdet_hermitian(eve_total);
    if (std::max(std::max(ln.cond, lt.cond), std::max(en.cond, et.cond)) >
        kMaxCondition) {
      out.resampled++;
      continue;
    }
    out.r_u = (lt.value - ln.value) / kLog2;
    out.c_e = (et.value - en.value) / kLog2;
    return out;
  }
}

}  // namespace

RateReport rate_monte_carlo(const SystemConfig& cfg, long trials,
                            std::uint64_t seed, int workers) {
  require_valid(cfg);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  workers = std::clamp(workers, 1, 256);

  std::vector<TrialResult> results(trials);
  auto run_range = [&](long begin, long end) {
    for (long t = begin; t < end; ++t)
      results[t] = run_trial(cfg, seed, static_cast<std::uint64_t>(t));
  };
  if (workers == 1 || trials < 2 * workers) {
    run_range(0, trials);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      long begin = w * chunk;
      long end = std::min(trials, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  // Fixed-order reduction so the estimate is independent of the worker
  // split.
  RateReport r;
  r.method = RateMethod::monte_carlo;
  r.trials = trials;
  double sum_u = 0.0, sum_e = 0.0;
  for (const auto& t : results) {
    sum_u += t.r_u;
    sum_e += t.c_e;
    r.resampled += t.resampled;
  }
  r.r_u = sum_u / trials;
  r.c_e = sum_e / trials;
  r.r_s = positive_part(r.r_u - r.c_e);
  if (trials > 1) {
    double var_u = 0.0, var_e = 0.0, var_s = 0.0;
    for (const auto& t : results) {
      var_u += (t.r_u - r.r_u) * (t.r_u - r.r_u);
      var_e += (t.c_e - r.c_e) * (t.c_e - r.c_e);
      const double d = (t.r_u - t.c_e) - (r.r_u - r.c_e);
      var_s += d * d;
    }
    const double norm = 1.0 / (static_cast<double>(trials) - 1) / trials;
    r.std_err_r_u = std::sqrt(var_u * norm);
    r.std_err_c_e = std::sqrt(var_e * norm);
    r.std_err = std::sqrt(var_s * norm);
  }
  return r;
}

EveAsymptotic eve_asymptotic(const SystemConfig& cfg) {
  require_valid(cfg);
  const double rho = cfg.rho(), eta = cfg.eta;
  const double mix = rho + eta * (1.0 - rho);
  const double gain = cfg.phi * cfg.m_e / ((1.0 - cfg.phi) * cfg.m_t * mix);
  EveAsymptotic e;
  e.t1 = cfg.m_t * rho * log2_of(1.0 + gain);
  e.t2 = cfg.m_t * (1.0 - rho) * log2_of(1.0 + gain * eta);
  return e;
}

RateReport rate_low_snr(const SystemConfig& cfg) {
  require_valid(cfg);
  RateReport r;
  r.method = RateMethod::asymptotic_low;
  r.r_u = cfg.m_t * log2_of(1.0 + cfg.m_r * cfg.phi * cfg.power /
                                      (cfg.m_t * cfg.noise_var));
  r.c_e = eve_asymptotic(cfg).total();
  r.r_s = positive_part(r.r_u - r.c_e);
  if (cfg.snr() > 1.0)
    r.note = "low-SNR asymptote evaluated above 0 dB; accuracy degrades";
  return r;
}

RateReport rate_high_snr(const SystemConfig& cfg) {
  require_valid(cfg);
  const double rho = cfg.rho();
  const double depletion = 1.0 - cfg.m_r / (cfg.n_t * (1.0 - rho));
  if (depletion <= 0.0)
    throw unsupported_regime(
        "high-SNR asymptote needs rho < 1 - m_r/n_t (positive effective AN "
        "dimension)");
  RateReport r;
  r.method = RateMethod::asymptotic_high;
  r.r_u = cfg.m_t *
          log2_of(1.0 + cfg.m_r * cfg.phi /
                            (cfg.m_t * (1.0 - cfg.phi) * cfg.eta * depletion));
  r.c_e = eve_asymptotic(cfg).total();
  r.r_s = positive_part(r.r_u - r.c_e);
  if (cfg.snr() < 100.0)
    r.note = "high-SNR asymptote evaluated below 20 dB; accuracy degrades";
  return r;
}

double chi_l(double rho, double eta) {
  return std::pow(eta, rho - 1.0) * (eta + (1.0 - eta) * rho);
}

double chi_h(double rho, double eta, int m_r, int n_t) {
  const double depletion = 1.0 - static_cast<double>(m_r) / (n_t * (1.0 - rho));
  if (depletion <= 0.0)
    throw unsupported_regime("chi_h needs rho < 1 - m_r/n_t");
  return std::pow(eta, rho - 2.0) * (eta + (1.0 - eta) * rho) / depletion;
}

double rho_star(double eta) {
  if (!(eta > 0.0 && eta < 1.0))
    throw std::domain_error("rho_star: eta must lie in (0,1)");
  return -1.0 / std::log(eta) - eta / (1.0 - eta);
}

SparsityMetrics chi_metrics(double rho, double eta, const SystemConfig& cfg) {
  if (!(rho > 0.0 && rho < 1.0) || !(eta > 0.0 && eta < 1.0))
    throw std::domain_error("chi_metrics: rho and eta must lie in (0,1)");
  SparsityMetrics m;
  m.chi_l = chi_l(rho, eta);
  m.chi_h = chi_h(rho, eta, cfg.m_r, cfg.n_t);
  m.rho_star = rho_star(eta);
  // round half toward the larger l_t, then keep chi_h defined
  long raw = std::lround(std::floor(m.rho_star * cfg.n_t + 0.5));
  long lo = cfg.m_t;
  long hi = cfg.n_t - cfg.m_r - 1;
  m.l_t_star = static_cast<int>(std::clamp(raw, lo, hi));
  return m;
}

double bound_low_rate(const SystemConfig& cfg) {
  require_valid(cfg);
  const double bob_low = log2_of(1.0 + cfg.m_r * cfg.phi * cfg.power /
                                           (cfg.m_t * cfg.noise_var));
  const double eve_flat =
      log2_of(cfg.phi * cfg.m_e / ((1.0 - cfg.phi) * cfg.m_t));
  return cfg.m_t * positive_part(bob_low - eve_flat +
                                 log2_of(chi_l(cfg.rho(), cfg.eta)));
}

double bound_high_rate(const SystemConfig& cfg) {
  require_valid(cfg);
  return cfg.m_t *
         positive_part(log2_of(static_cast<double>(cfg.m_r) / cfg.m_e) +
                       log2_of(chi_h(cfg.rho(), cfg.eta, cfg.m_r, cfg.n_t)));
}

SecrecyBounds bounds(const SystemConfig& cfg) {
  SecrecyBounds b;
  b.low = bound_low_rate(cfg);
  b.high = bound_high_rate(cfg);
  return b;
}

double rate_gap(std::pair<double, double> p1, std::pair<double, double> p2,
                const SystemConfig& cfg, SnrRegime regime) {
  auto chi = [&](std::pair<double, double> p) {
    if (!(p.first > 0.0 && p.first < 1.0) || !(p.second > 0.0 && p.second < 1.0))
      throw std::domain_error("rate_gap: rho and eta must lie in (0,1)");
    return regime == SnrRegime::low
               ? chi_l(p.first, p.second)
               : chi_h(p.first, p.second, cfg.m_r, cfg.n_t);
  };
  return cfg.m_t * log2_of(chi(p1) / chi(p2));
}

ChiDerivatives chi_derivatives(double rho, double eta,
                               const SystemConfig& cfg) {
  if (!(rho > 0.0 && rho < 1.0) || !(eta > 0.0 && eta < 1.0))
    throw std::domain_error("chi_derivatives: interior (rho, eta) required");
  const double mix = eta + (1.0 - eta) * rho;
  const double ln_eta = std::log(eta);
  ChiDerivatives d;
  d.d_chi_l_d_rho = std::pow(eta, rho - 1.0) * (1.0 - eta + ln_eta * mix);
  d.d_chi_l_d_eta = -(1.0 - rho) * rho * (1.0 - eta) * std::pow(eta, rho - 2.0);
  const double depletion = 1.0 - static_cast<double>(cfg.m_r) /
                                     (cfg.n_t * (1.0 - rho));
  if (depletion <= 0.0)
    throw unsupported_regime("chi_derivatives: chi_h needs rho < 1 - m_r/n_t");
  d.d_chi_h_d_eta =
      (rho * (rho - 2.0) - eta * (rho - 1.0) * (rho - 1.0)) *
      std::pow(eta, rho - 3.0) / depletion;
  const double root_gap = 1.0 / std::sqrt(eta) - std::sqrt(eta);
  const double denom = (1.0 - eta) * ln_eta;
  d.d_rho_star_d_eta =
      (root_gap + ln_eta) * (root_gap - ln_eta) / (denom * denom);
  return d;
}

double chi_l_second_derivative_rho(double rho, double eta) {
  const double mix = eta + (1.0 - eta) * rho;
  const double ln_eta = std::log(eta);
  return std::pow(eta, rho - 1.0) * ln_eta * (2.0 - 2.0 * eta + ln_eta * mix);
}

}  // namespace secmimo
