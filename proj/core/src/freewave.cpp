#include "radfield/freewave.hpp"

#include <cmath>
#include <stdexcept>

#include "radfield/fft.hpp"
#include "radfield/parallel.hpp"

namespace radfield {

RadialPair::RadialPair(double dr_, std::vector<double> u0_, std::vector<double> u1_)
    : dr(dr_), u0(std::move(u0_)), u1(std::move(u1_)) {
  if (!(dr > 0.0)) throw std::invalid_argument("RadialPair: dr must be positive");
  if (u0.size() != u1.size() || u0.size() < 8)
    throw std::invalid_argument("RadialPair: u0/u1 must have equal size >= 8");
  for (std::size_t i = 0; i < u0.size(); ++i)
    if (!std::isfinite(u0[i]) || !std::isfinite(u1[i]))
      throw std::invalid_argument("RadialPair: non-finite sample");
}

double support_radius(const RadialPair& p, double tol) {
  double peak = 0.0;
  for (int i = 0; i < p.count(); ++i)
    peak = std::max(peak, std::max(std::fabs(p.u0[i]), std::fabs(p.u1[i])));
  if (peak == 0.0) return 0.0;
  for (int i = p.count() - 1; i >= 0; --i) {
    if (std::fabs(p.u0[i]) > tol * peak || std::fabs(p.u1[i]) > tol * peak)
      return p.r(i);
  }
  return 0.0;
}

namespace {

// Derivative of v0 at the nodes by 5-point stencils, using the odd
// extension across r = 0 and one-sided stencils at the outer edge.
std::vector<double> stencil_derivative_odd(const std::vector<double>& v, double dr) {
  const int n = static_cast<int>(v.size());
  auto at = [&](int i) { return i >= 0 ? v[i] : -v[-i]; };
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) {
    if (i <= n - 3) {
      d[i] = (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) / (12.0 * dr);
    } else {
      // one-sided at the outer edge (data there are below the decay floor)
      d[i] = (25.0 * v[i] - 48.0 * v[i - 1] + 36.0 * v[i - 2] - 16.0 * v[i - 3] +
              3.0 * v[i - 4]) /
             (12.0 * dr);
    }
  }
  return d;
}

// Cumulative integral of node samples at fourth order: each cell uses the
// cubic through its four surrounding nodes; the first cell reaches across
// r = 0 by the odd extension.
std::vector<double> cumulative_integral_odd(const std::vector<double>& f, double dr) {
  const int n = static_cast<int>(f.size());
  auto at = [&](int i) { return i >= 0 ? f[i] : -f[-i]; };
  std::vector<double> F(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) {
    double cell;
    if (i + 2 < n) {
      cell = (-at(i - 1) + 13.0 * at(i) + 13.0 * at(i + 1) - at(i + 2)) * dr / 24.0;
    } else {
      cell = (at(i - 2) - 5.0 * at(i - 1) + 19.0 * at(i) + 9.0 * at(i + 1)) * dr / 24.0;
    }
    F[i + 1] = F[i] + cell;
  }
  return F;
}

std::vector<double> scale_by_r(const std::vector<double>& u, double dr) {
  std::vector<double> v(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) v[i] = dr * static_cast<double>(i) * u[i];
  return v;
}

}  // namespace

RadialWave::RadialWave(const RadialPair& p)
    : r_max_(p.r_max()), dr_(p.dr),
      v1_total_(0.0),
      v0_(0.0, p.dr, scale_by_r(p.u0, p.dr)),
      v1_(0.0, p.dr, scale_by_r(p.u1, p.dr)),
      V1_(0.0, p.dr, cumulative_integral_odd(scale_by_r(p.u1, p.dr), p.dr)),
      dv0_(0.0, p.dr, stencil_derivative_odd(scale_by_r(p.u0, p.dr), p.dr)) {
  v1_total_ = V1_(r_max_);
}

double RadialWave::eval_odd(const CubicSpline1D& sp, double s) const {
  double a = std::fabs(s);
  if (a > r_max_) return 0.0;
  double v = sp(a);
  return s < 0.0 ? -v : v;
}

double RadialWave::eval_even(const CubicSpline1D& sp, double s) const {
  double a = std::fabs(s);
  if (a > r_max_) return 0.0;
  return sp(a);
}

double RadialWave::v0(double s) const { return eval_odd(v0_, s); }
double RadialWave::v0_prime(double s) const { return eval_even(dv0_, s); }
double RadialWave::v1(double s) const { return eval_odd(v1_, s); }

double RadialWave::V1(double s) const {
  double a = std::fabs(s);
  if (a >= r_max_) return v1_total_;  // all mass is inside r_max
  return V1_(a);
}

double RadialWave::v(double r, double t) const {
  return 0.5 * (v0(r + t) + v0(r - t)) + 0.5 * (V1(r + t) - V1(r - t));
}

double RadialWave::v_t(double r, double t) const {
  return 0.5 * (v0_prime(r + t) - v0_prime(r - t)) + 0.5 * (v1(r + t) + v1(r - t));
}

double RadialWave::u(double r, double t) const {
  if (r > 1e-12) return v(r, t) / r;
  // r -> 0 limit: one-sided derivative of v at the axis
  double h = dr_;
  return (-25.0 * v(0.0, t) + 48.0 * v(h, t) - 36.0 * v(2 * h, t) + 16.0 * v(3 * h, t) -
          3.0 * v(4 * h, t)) /
         (12.0 * h);
}

DataPair evolve(const DataPair& p, double t, double support_radius, Diagnostics* diag) {
  const double L = p.u0.grid.half_width();
  if (std::fabs(t) + support_radius > L)
    warn_into(diag, "evolve: |t| + support radius exceeds the box half-width; "
                    "periodic images pollute the region of interest");
  SpectralField3 U0 = dft3(p.u0);
  SpectralField3 U1 = dft3(p.u1);
  const int n = U0.grid.n();
  SpectralField3 Ut(U0.grid);
  SpectralField3 Udt(U0.grid);
  parallel_for(U0.grid.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      int k = static_cast<int>(idx % n);
      int j = static_cast<int>((idx / n) % n);
      int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
      double x1 = U0.grid.freq(i), x2 = U0.grid.freq(j), x3 = U0.grid.freq(k);
      double w = std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
      double c = std::cos(t * w);
      double s = std::sin(t * w);
      double sw = w == 0.0 ? 0.0 : s / w;  // xi = 0 mode of |xi|^{-1} dropped
      Ut.coeffs[idx] = c * U0.coeffs[idx] + sw * U1.coeffs[idx];
      Udt.coeffs[idx] = -w * s * U0.coeffs[idx] + c * U1.coeffs[idx];
    }
  });
  return DataPair(idft3(Ut, diag), idft3(Udt, diag), p.beta);
}

RadialPair evolve_radial(const RadialPair& p, double t) {
  const double supp = support_radius(p);
  if (std::fabs(t) + supp > p.r_max())
    throw std::invalid_argument("evolve_radial: |t| + support exceeds r_max");
  RadialWave w(p);
  const int n = p.count();
  std::vector<double> u0(n), u1(n);
  for (int i = 0; i < n; ++i) {
    double r = p.r(i);
    if (i == 0) {
      double h = p.dr;
      u0[0] = (-25.0 * w.v(0, t) + 48.0 * w.v(h, t) - 36.0 * w.v(2 * h, t) +
               16.0 * w.v(3 * h, t) - 3.0 * w.v(4 * h, t)) /
              (12.0 * h);
      u1[0] = (-25.0 * w.v_t(0, t) + 48.0 * w.v_t(h, t) - 36.0 * w.v_t(2 * h, t) +
               16.0 * w.v_t(3 * h, t) - 3.0 * w.v_t(4 * h, t)) /
              (12.0 * h);
    } else {
      u0[i] = w.v(r, t) / r;
      u1[i] = w.v_t(r, t) / r;
    }
  }
  return RadialPair(p.dr, std::move(u0), std::move(u1));
}

RadiationProfile radial_profile(const RadialPair& p, const LineGrid& line,
                                const SphereGrid& sphere, Direction direction,
                                double shift) {
  RadialWave w(p);
  const int m = line.m();
  std::vector<double> g(m);
  for (int i = 0; i < m; ++i) {
    double s = line.point(i) + shift;
    double a = w.v1(s);
    double b = w.v0_prime(s);
    g[i] = direction == Direction::plus ? 0.5 * (a - b) : 0.5 * (a + b);
  }
  RadiationProfile out(line, sphere, direction);
  for (int j = 0; j < sphere.count(); ++j)
    for (int i = 0; i < m; ++i) out.value(i, j) = g[i];
  return out;
}

}  // namespace radfield
