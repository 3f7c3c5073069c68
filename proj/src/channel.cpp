#include "secmimo/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace secmimo {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over base ^ index
  std::uint64_t z = base ^ index;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::complex<double> sample_cn(std::mt19937_64& rng, double var) {
  // Box-Muller; each complex draw consumes exactly two engine outputs.
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double u1 = 1.0 - unif(rng);  // (0, 1]
  double u2 = unif(rng);
  double r = std::sqrt(-std::log(u1) * var);  // radius for variance var
  double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

namespace {

// Uniform size-k subset of {0..n-1} via partial Fisher-Yates, sorted.
std::vector<int> sample_subset(int n, int k, std::mt19937_64& rng) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

// Uniform size-k subset of the given (sorted) set.
std::vector<int> sample_from(const std::vector<int>& set, int k,
                             std::mt19937_64& rng) {
  std::vector<int> pos = sample_subset(static_cast<int>(set.size()), k, rng);
  for (int& p : pos) p = set[p];
  return pos;
}

std::vector<char> membership(const std::vector<int>& set, int n) {
  std::vector<char> in(n, 0);
  for (int i : set) in[i] = 1;
  return in;
}

std::vector<int> complement(const std::vector<int>& set, int n) {
  std::vector<char> in = membership(set, n);
  std::vector<int> out;
  out.reserve(n - set.size());
  for (int i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

}  // namespace

SparsityPattern sample_pattern(const SystemConfig& cfg, std::mt19937_64& rng) {
  SparsityPattern p;
  p.u_t = sample_subset(cfg.n_t, cfg.l_t, rng);
  p.u_r = sample_subset(cfg.n_r, cfg.l_r, rng);
  p.e_t = sample_subset(cfg.n_t, cfg.l_t, rng);
  p.e_r = sample_subset(cfg.n_e, cfg.l_e, rng);
  p.u_t_sel = sample_from(p.u_t, cfg.m_t, rng);
  p.u_r_sel = sample_from(p.u_r, cfg.m_r, rng);
  p.e_r_sel = sample_from(p.e_r, cfg.m_e, rng);
  return p;
}

SparsityPattern sample_pattern(const SystemConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_pattern(cfg, rng);
}

VirtualChannelPair sample_channels(const SystemConfig& cfg,
                                   const SparsityPattern& pattern,
                                   std::mt19937_64& rng) {
  VirtualChannelPair pair;
  pair.pattern = pattern;
  pair.eta = cfg.eta;

  const std::vector<char> in_ur = membership(pattern.u_r, cfg.n_r);
  const std::vector<char> in_ut = membership(pattern.u_t, cfg.n_t);
  pair.g.resize(cfg.n_r, cfg.n_t);
  for (int i = 0; i < cfg.n_r; ++i)
    for (int j = 0; j < cfg.n_t; ++j)
      pair.g(i, j) = sample_cn(rng, (in_ur[i] && in_ut[j]) ? 1.0 : cfg.eta);

  const std::vector<char> in_er = membership(pattern.e_r, cfg.n_e);
  const std::vector<char> in_et = membership(pattern.e_t, cfg.n_t);
  pair.h.resize(cfg.n_e, cfg.n_t);
  for (int i = 0; i < cfg.n_e; ++i)
    for (int j = 0; j < cfg.n_t; ++j)
      pair.h(i, j) = sample_cn(rng, (in_er[i] && in_et[j]) ? 1.0 : cfg.eta);

  return pair;
}

VirtualChannelPair sample_channels(const SystemConfig& cfg,
                                   const SparsityPattern& pattern,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_channels(cfg, pattern, rng);
}

namespace {

ComplexMatrix take(const ComplexMatrix& m, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
  ComplexMatrix out(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      out(i, j) = m(rows[i], cols[j]);
  return out;
}

}  // namespace

ChannelSlices slice(const VirtualChannelPair& pair) {
  const SparsityPattern& p = pair.pattern;
  auto check_indices = [](const std::vector<int>& set, Eigen::Index bound,
                          const char* name) {
    for (int i : set)
      if (i < 0 || i >= bound)
        throw std::invalid_argument(std::string("pattern index set ") + name +
                                    " out of range for channel dimensions");
  };
  check_indices(p.u_r_sel, pair.g.rows(), "u_r_sel");
  check_indices(p.u_t, pair.g.cols(), "u_t");
  check_indices(p.u_t_sel, pair.g.cols(), "u_t_sel");
  check_indices(p.e_r_sel, pair.h.rows(), "e_r_sel");
  if (pair.g.cols() != pair.h.cols())
    throw std::invalid_argument("G and H disagree on transmit dimension");

  const int n_t = static_cast<int>(pair.g.cols());
  const std::vector<int> comp = complement(p.u_t, n_t);

  ChannelSlices s;
  s.g_bar = take(pair.g, p.u_r_sel, p.u_t_sel);
  s.g_hat = take(pair.g, p.u_r_sel, comp);
  s.h_bar = take(pair.h, p.e_r_sel, p.u_t_sel);
  s.h_hat = take(pair.h, p.e_r_sel, comp);
  return s;
}

ChannelSlices sample_slices(const SystemConfig& cfg,
                            const SparsityPattern& pattern,
                            std::mt19937_64& rng) {
  const int n_c = cfg.n_t - cfg.l_t;  // nondominant transmit beams
  const std::vector<char> in_et = membership(pattern.e_t, cfg.n_t);
  const std::vector<int> comp = complement(pattern.u_t, cfg.n_t);

  ChannelSlices s;
  // Bob: selected rows/cols are all dominant for G, the complement
  // columns all nondominant.
  s.g_bar.resize(cfg.m_r, cfg.m_t);
  for (int i = 0; i < cfg.m_r; ++i)
    for (int j = 0; j < cfg.m_t; ++j) s.g_bar(i, j) = sample_cn(rng, 1.0);
  s.g_hat.resize(cfg.m_r, n_c);
  for (int i = 0; i < cfg.m_r; ++i)
    for (int j = 0; j < n_c; ++j) s.g_hat(i, j) = sample_cn(rng, cfg.eta);

  // Eve: column variance depends on membership in her own dominant set.
  s.h_bar.resize(cfg.m_e, cfg.m_t);
  for (int i = 0; i < cfg.m_e; ++i)
    for (int j = 0; j < cfg.m_t; ++j)
      s.h_bar(i, j) = sample_cn(rng, in_et[pattern.u_t_sel[j]] ? 1.0 : cfg.eta);
  s.h_hat.resize(cfg.m_e, n_c);
  for (int i = 0; i < cfg.m_e; ++i)
    for (int j = 0; j < n_c; ++j)
      s.h_hat(i, j) = sample_cn(rng, in_et[comp[j]] ? 1.0 : cfg.eta);
  return s;
}

ComplexMatrix steering_matrix(int n, double spacing_ratio) {
  if (n < 1) throw std::invalid_argument("steering_matrix: n must be >= 1");
  (void)spacing_ratio;  // the spatial-angle grid is independent of spacing
  ComplexMatrix a(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    const double spatial = (j - (n - 1) / 2.0) / n;
    for (int k = 0; k < n; ++k) {
      const double phase = -2.0 * std::numbers::pi * k * spatial;
      a(k, j) = norm * std::complex<double>(std::cos(phase), std::sin(phase));
    }
  }
  return a;
}

std::vector<double> grid_angles(int n, double spacing_ratio) {
  if (n < 1) throw std::invalid_argument("grid_angles: n must be >= 1");
  std::vector<double> angles(n);
  for (int j = 0; j < n; ++j) {
    const double spatial = (j - (n - 1) / 2.0) / n;
    angles[j] = std::asin(spatial / spacing_ratio);
  }
  return angles;
}

void dump_matrix_csv(const ComplexMatrix& m, std::ostream& out) {
  out.precision(17);
  out << "i,j,re,im\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out << i << ',' << j << ',' << m(i, j).real() << ',' << m(i, j).imag()
          << '\n';
}

}  // namespace secmimo
