#include "radfield/interp.hpp"

#include <cmath>
#include <stdexcept>

namespace radfield {

CubicSpline1D::CubicSpline1D(double x0, double spacing, std::span<const double> values)
    : x0_(x0), h_(spacing), n_(static_cast<int>(values.size())),
      y_(values.begin(), values.end()), m_(values.size(), 0.0) {
  if (n_ < 4) throw std::invalid_argument("CubicSpline1D: need at least 4 samples");
  if (!(h_ > 0.0)) throw std::invalid_argument("CubicSpline1D: spacing must be positive");
  for (double v : y_)
    if (!std::isfinite(v)) throw std::invalid_argument("CubicSpline1D: NaN in samples");

  // Second derivatives from M_{i-1} + 4 M_i + M_{i+1} = D_i with not-a-knot
  // ends (third derivative continuous at the second and penultimate knots).
  // The end conditions pin M_1 and M_{n-2} directly; the rest is a Thomas
  // sweep on the interior unknowns.
  const int n = n_;
  auto D = [&](int i) { return 6.0 * (y_[i - 1] - 2.0 * y_[i] + y_[i + 1]) / (h_ * h_); };
  m_[1] = D(1) / 6.0;
  m_[n - 2] = D(n - 2) / 6.0;
  if (n > 4) {
    const int k = n - 5;  // unknowns M_2 .. M_{n-3}
    if (k == 0) {
      // single unknown M_2 with both neighbours known
      m_[2] = (D(2) - m_[1] - m_[3]) / 4.0;
    } else if (k > 0) {
      std::vector<double> c(k + 1, 0.0), d(k + 1, 0.0);
      // rows i = 2 .. n-3; rhs adjusted for the pinned neighbours
      double beta = 4.0;
      d[0] = (D(2) - m_[1]) / beta;
      c[0] = 1.0 / beta;
      for (int j = 1; j <= k; ++j) {
        int i = 2 + j;
        double rhs = D(i);
        if (i == n - 3) rhs -= m_[n - 2];
        beta = 4.0 - c[j - 1];
        c[j] = 1.0 / beta;
        d[j] = (rhs - d[j - 1]) / beta;
      }
      m_[2 + k] = d[k];
      for (int j = k - 1; j >= 0; --j) m_[2 + j] = d[j] - c[j] * m_[2 + j + 1];
    }
  }
  m_[0] = 2.0 * m_[1] - m_[2];
  m_[n - 1] = 2.0 * m_[n - 2] - m_[n - 3];
}

double CubicSpline1D::operator()(double x) const {
  double f = (x - x0_) / h_;
  if (f < 0.0 || f > static_cast<double>(n_ - 1)) return 0.0;
  int i = static_cast<int>(f);
  if (i >= n_ - 1) i = n_ - 2;
  double t = f - i;
  double a = 1.0 - t;
  return y_[i] * a + y_[i + 1] * t +
         (h_ * h_ / 6.0) * ((a * a * a - a) * m_[i] + (t * t * t - t) * m_[i + 1]);
}

double CubicSpline1D::derivative(double x) const {
  double f = (x - x0_) / h_;
  if (f < 0.0 || f > static_cast<double>(n_ - 1)) return 0.0;
  int i = static_cast<int>(f);
  if (i >= n_ - 1) i = n_ - 2;
  double t = f - i;
  double a = 1.0 - t;
  return (y_[i + 1] - y_[i]) / h_ +
         (h_ / 6.0) * ((1.0 - 3.0 * a * a) * m_[i] + (3.0 * t * t - 1.0) * m_[i + 1]);
}

double interp1(std::span<const double> samples, const LineGrid& grid, double s) {
  if (samples.size() != static_cast<std::size_t>(grid.m()))
    throw std::invalid_argument("interp1: sample count != grid size");
  CubicSpline1D spline(grid.point(0), grid.spacing(), samples);
  return spline(s);
}

std::complex<double> interp3(const SpectralField3& F, const std::array<double, 3>& xi) {
  const int n = F.grid.n();
  const double dxi = F.grid.freq_spacing();
  const int half = n / 2;
  double f[3];
  int c[3];
  double t[3];
  for (int a = 0; a < 3; ++a) {
    f[a] = xi[a] / dxi;
    c[a] = static_cast<int>(std::floor(f[a]));
    t[a] = f[a] - c[a];
  }
  std::complex<double> acc(0.0, 0.0);
  for (int bx = 0; bx < 2; ++bx)
    for (int by = 0; by < 2; ++by)
      for (int bz = 0; bz < 2; ++bz) {
        int sx = c[0] + bx, sy = c[1] + by, sz = c[2] + bz;
        if (sx < -half || sx >= half || sy < -half || sy >= half || sz < -half ||
            sz >= half)
          continue;  // outside the frequency box: treated as 0
        double w = (bx ? t[0] : 1.0 - t[0]) * (by ? t[1] : 1.0 - t[1]) *
                   (bz ? t[2] : 1.0 - t[2]);
        int ix = sx < 0 ? sx + n : sx;
        int iy = sy < 0 ? sy + n : sy;
        int iz = sz < 0 ? sz + n : sz;
        acc += w * F.coeffs[F.grid.index(ix, iy, iz)];
      }
  return acc;
}

double interp3_real(const ScalarField3& f, const std::array<double, 3>& x) {
  const int n = f.grid.n();
  const double h = f.grid.spacing();
  const double L = f.grid.half_width();
  double fr[3];
  int c[3];
  double t[3];
  for (int a = 0; a < 3; ++a) {
    fr[a] = (x[a] + L) / h;
    c[a] = static_cast<int>(std::floor(fr[a]));
    t[a] = fr[a] - c[a];
  }
  double acc = 0.0;
  for (int bx = 0; bx < 2; ++bx)
    for (int by = 0; by < 2; ++by)
      for (int bz = 0; bz < 2; ++bz) {
        int ix = c[0] + bx, iy = c[1] + by, iz = c[2] + bz;
        if (ix < 0 || ix >= n || iy < 0 || iy >= n || iz < 0 || iz >= n) continue;
        double w = (bx ? t[0] : 1.0 - t[0]) * (by ? t[1] : 1.0 - t[1]) *
                   (bz ? t[2] : 1.0 - t[2]);
        acc += w * f.values[f.grid.index(ix, iy, iz)];
      }
  return acc;
}

}  // namespace radfield
