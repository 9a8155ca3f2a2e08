#include "radfield/sobolev.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "radfield/fft.hpp"
#include "radfield/parallel.hpp"

namespace radfield {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

DataPair::DataPair(ScalarField3 u0_, ScalarField3 u1_, double beta_)
    : u0(std::move(u0_)), u1(std::move(u1_)), beta(beta_) {
  if (!(u0.grid == u1.grid)) throw std::invalid_argument("DataPair: grids differ");
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("DataPair: beta must lie in (0, 1]");
}

RadiationProfile::RadiationProfile(LineGrid line, SphereGrid sphere, Direction direction)
    : line_(line), sphere_(sphere), direction_(direction),
      values_(static_cast<std::size_t>(line.m()) * sphere.count(), 0.0) {}

RadiationProfile::RadiationProfile(LineGrid line, SphereGrid sphere, Direction direction,
                                   std::vector<double> values)
    : line_(line), sphere_(sphere), direction_(direction), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(line_.m()) * sphere_.count())
    throw std::invalid_argument("RadiationProfile: value count != m * (n_theta * n_phi)");
  for (double v : values_)
    if (!std::isfinite(v)) throw std::invalid_argument("RadiationProfile: non-finite value");
}

bool RadiationProfile::is_zonal(double tol) const {
  const int m = line_.m();
  const int nd = sphere_.count();
  for (int i = 0; i < m; ++i) {
    double v0 = value(i, 0);
    for (int j = 1; j < nd; ++j)
      if (std::fabs(value(i, j) - v0) > tol) return false;
  }
  return true;
}

double hdot_norm_r3(const ScalarField3& f, double beta, Diagnostics* diag) {
  if (beta < -1.0 || beta > 1.0)
    throw std::invalid_argument("hdot_norm_r3: beta outside [-1, 1]");
  check_boundary_decay(f, diag);
  SpectralField3 F = dft3(f);
  const int n = F.grid.n();
  const double dxi = F.grid.freq_spacing();
  const double cell = dxi * dxi * dxi / (kTwoPi * kTwoPi * kTwoPi);
  double sum = parallel_reduce(F.grid.size(), [&](std::size_t lo, std::size_t hi) {
    double acc = 0.0;
    for (std::size_t idx = lo; idx < hi; ++idx) {
      int k = static_cast<int>(idx % n);
      int j = static_cast<int>((idx / n) % n);
      int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
      double x1 = F.grid.freq(i), x2 = F.grid.freq(j), x3 = F.grid.freq(k);
      double q = x1 * x1 + x2 * x2 + x3 * x3;
      if (q == 0.0) continue;
      acc += std::pow(q, beta) * std::norm(F.coeffs[idx]);
    }
    return acc;
  });
  return std::sqrt(cell * sum);
}

double pair_norm(const DataPair& p, Diagnostics* diag) { return pair_norm(p, p.beta, diag); }

double pair_norm(const DataPair& p, double beta, Diagnostics* diag) {
  double a = hdot_norm_r3(p.u0, beta, diag);
  double b = hdot_norm_r3(p.u1, beta - 1.0, diag);
  return std::sqrt(a * a + b * b);
}

double hdot_norm_line(std::span<const double> samples, const LineGrid& grid, double beta) {
  if (samples.size() != static_cast<std::size_t>(grid.m()))
    throw std::invalid_argument("hdot_norm_line: sample count != grid size");
  const int m = grid.m();
  std::vector<std::complex<double>> buf(samples.begin(), samples.end());
  line_dft_rows(grid, buf.data(), 1);
  double sum = 0.0;
  for (int l = 0; l < m; ++l) {
    double nu = grid.freq(l);
    if (nu == 0.0) continue;
    sum += std::pow(nu * nu, beta) * std::norm(buf[l]);
  }
  return std::sqrt(grid.freq_spacing() / kTwoPi * sum);
}

double hdot_norm_cyl(const RadiationProfile& G, double beta) {
  if (beta <= -1.0 || beta >= 1.0)
    throw std::invalid_argument("hdot_norm_cyl: beta outside (-1, 1)");
  const int m = G.line().m();
  const int nd = G.sphere().count();
  std::vector<std::complex<double>> buf(G.values().begin(), G.values().end());
  line_dft_rows(G.line(), buf.data(), nd);
  std::vector<double> weight(m);
  for (int l = 0; l < m; ++l) {
    double nu = G.line().freq(l);
    weight[l] = nu == 0.0 ? 0.0 : std::pow(nu * nu, beta);
  }
  const double cell = G.line().freq_spacing() / kTwoPi;
  double total = 0.0;
  for (int j = 0; j < nd; ++j) {
    const std::complex<double>* row = buf.data() + static_cast<std::size_t>(j) * m;
    double acc = 0.0;
    for (int l = 0; l < m; ++l) acc += weight[l] * std::norm(row[l]);
    total += G.sphere().weight(j) * cell * acc;
  }
  return std::sqrt(total);
}

RadiationProfile ds_frac(const RadiationProfile& G, double alpha) {
  if (alpha < -1.0 || alpha > 1.0)
    throw std::invalid_argument("ds_frac: |alpha| must be <= 1");
  const int m = G.line().m();
  const int nd = G.sphere().count();
  std::vector<std::complex<double>> buf(G.values().begin(), G.values().end());
  line_dft_rows(G.line(), buf.data(), nd);
  std::vector<double> mult(m);
  for (int l = 0; l < m; ++l) {
    double nu = G.line().freq(l);
    mult[l] = nu == 0.0 ? 0.0 : std::pow(std::fabs(nu), alpha);
  }
  for (int j = 0; j < nd; ++j) {
    std::complex<double>* row = buf.data() + static_cast<std::size_t>(j) * m;
    for (int l = 0; l < m; ++l) row[l] *= mult[l];
  }
  line_idft_rows(G.line(), buf.data(), nd);
  RadiationProfile out(G.line(), G.sphere(), G.direction());
  for (std::size_t i = 0; i < out.values().size(); ++i) out.values()[i] = buf[i].real();
  return out;
}

namespace {

template <typename Keep>
RadiationProfile apply_cutoff(const RadiationProfile& G, Keep keep) {
  RadiationProfile out(G.line(), G.sphere(), G.direction());
  const int m = G.line().m();
  const int nd = G.sphere().count();
  for (int i = 0; i < m; ++i) {
    if (!keep(G.line().point(i))) continue;
    for (int j = 0; j < nd; ++j) out.value(i, j) = G.value(i, j);
  }
  return out;
}

}  // namespace

RadiationProfile cutoff_plus(const RadiationProfile& G, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("cutoff_plus: r must be positive");
  return apply_cutoff(G, [r](double s) { return s > r; });
}

RadiationProfile cutoff_minus(const RadiationProfile& G, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("cutoff_minus: r must be positive");
  return apply_cutoff(G, [r](double s) { return s < -r; });
}

RadiationProfile cutoff_window(const RadiationProfile& G, double a, double b) {
  if (!(a < b)) throw std::invalid_argument("cutoff_window: need a < b");
  return apply_cutoff(G, [a, b](double s) { return s > a && s < b; });
}

}  // namespace radfield
