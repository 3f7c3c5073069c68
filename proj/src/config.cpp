#include "secmimo/config.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace secmimo {

SystemConfig SystemConfig::symmetric(int n, int l, int m_t, int m_r, int m_e,
                                     double power, double noise_var,
                                     double phi, double eta) {
  SystemConfig cfg;
  cfg.n_t = cfg.n_r = cfg.n_e = n;
  cfg.l_t = cfg.l_r = cfg.l_e = l;
  cfg.m_t = m_t;
  cfg.m_r = m_r;
  cfg.m_e = m_e;
  cfg.power = power;
  cfg.noise_var = noise_var;
  cfg.phi = phi;
  cfg.eta = eta;
  return cfg;
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v;
  }
  return s;
}

ValidationReport validate(const SystemConfig& c) {
  ValidationReport r;
  auto fail = [&r](const std::string& msg) { r.violations.push_back(msg); };

  auto positive = [&](int v, const char* name) {
    if (v <= 0) fail(std::string(name) + " must be positive");
  };
  positive(c.n_t, "n_t");
  positive(c.n_r, "n_r");
  positive(c.n_e, "n_e");
  positive(c.m_t, "m_t");
  positive(c.m_r, "m_r");
  positive(c.m_e, "m_e");
  positive(c.l_t, "l_t");
  positive(c.l_r, "l_r");
  positive(c.l_e, "l_e");

  if (!(c.m_t <= c.l_t && c.l_t <= c.n_t))
    fail("m_t <= l_t <= n_t violated");
  if (!(c.m_r <= c.l_r && c.l_r <= c.n_r))
    fail("m_r <= l_r <= n_r violated");
  if (!(c.m_e <= c.l_e && c.l_e <= c.n_e))
    fail("m_e <= l_e <= n_e violated");
  if (c.n_t - c.l_t < c.m_e)
    fail("n_t - l_t >= m_e violated (Eve AN covariance not invertible)");

  if (!(c.power > 0)) fail("power must be positive");
  if (!(c.noise_var > 0)) fail("noise_var must be positive");
  if (!(c.phi > 0 && c.phi < 1)) fail("phi must lie strictly in (0,1)");
  if (!(c.eta > 0 && c.eta < 1)) fail("eta must lie strictly in (0,1)");

  return r;
}

void require_valid(const SystemConfig& cfg) {
  ValidationReport r = validate(cfg);
  if (!r.ok()) throw std::invalid_argument("invalid config: " + r.summary());
}

namespace {

void set_field(SystemConfig& cfg, std::string_view key, std::string_view value) {
  auto parse_int = [&](int& dst) {
    int v = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || p != value.data() + value.size())
      throw std::invalid_argument("bad integer for key '" + std::string(key) +
                                  "': " + std::string(value));
    dst = v;
  };
  auto parse_real = [&](double& dst) {
    try {
      size_t used = 0;
      double v = std::stod(std::string(value), &used);
      if (used != value.size()) throw std::invalid_argument("trailing junk");
      dst = v;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad real for key '" + std::string(key) +
                                  "': " + std::string(value));
    }
  };

  if (key == "n_t") parse_int(cfg.n_t);
  else if (key == "n_r") parse_int(cfg.n_r);
  else if (key == "n_e") parse_int(cfg.n_e);
  else if (key == "m_t") parse_int(cfg.m_t);
  else if (key == "m_r") parse_int(cfg.m_r);
  else if (key == "m_e") parse_int(cfg.m_e);
  else if (key == "l_t") parse_int(cfg.l_t);
  else if (key == "l_r") parse_int(cfg.l_r);
  else if (key == "l_e") parse_int(cfg.l_e);
  else if (key == "power") parse_real(cfg.power);
  else if (key == "noise_var") parse_real(cfg.noise_var);
  else if (key == "phi") parse_real(cfg.phi);
  else if (key == "eta") parse_real(cfg.eta);
  else
    throw std::invalid_argument("unknown config key: " + std::string(key));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

void apply_override(SystemConfig& cfg, std::string_view assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string_view::npos)
    throw std::invalid_argument("expected key=value, got: " +
                                std::string(assignment));
  set_field(cfg, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

SystemConfig parse_config_text(std::string_view text) {
  SystemConfig cfg;
  size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    try {
      apply_override(cfg, line);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  return cfg;
}

SystemConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string serialize(const SystemConfig& c) {
  std::ostringstream out;
  out.precision(17);
  out << "n_t=" << c.n_t << "\nn_r=" << c.n_r << "\nn_e=" << c.n_e
      << "\nm_t=" << c.m_t << "\nm_r=" << c.m_r << "\nm_e=" << c.m_e
      << "\nl_t=" << c.l_t << "\nl_r=" << c.l_r << "\nl_e=" << c.l_e
      << "\npower=" << c.power << "\nnoise_var=" << c.noise_var
      << "\nphi=" << c.phi << "\neta=" << c.eta << "\n";
  return out.str();
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

}  // namespace secmimo
