#include "radfield/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace radfield {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void require_finite(const std::vector<double>& v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite value");
  }
}

}  // namespace

UniformGrid3::UniformGrid3(int n, double half_width) : n_(n), half_width_(half_width) {
  if (!is_power_of_two(n) || n < 8)
    throw std::invalid_argument("UniformGrid3: n must be a power of two >= 8, got " +
                                std::to_string(n));
  if (!(half_width > 0.0))
    throw std::invalid_argument("UniformGrid3: half_width must be positive");
  spacing_ = 2.0 * half_width_ / n_;
}

ScalarField3::ScalarField3(UniformGrid3 g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.size())
    throw std::invalid_argument("ScalarField3: value count != n^3");
  require_finite(values, "ScalarField3");
}

ScalarField3::ScalarField3(UniformGrid3 g) : grid(g), values(grid.size(), 0.0) {}

SpectralField3::SpectralField3(UniformGrid3 g, std::vector<std::complex<double>> c)
    : grid(g), coeffs(std::move(c)) {
  if (coeffs.size() != grid.size())
    throw std::invalid_argument("SpectralField3: coefficient count != n^3");
  for (const auto& z : coeffs) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("SpectralField3: non-finite coefficient");
  }
}

SpectralField3::SpectralField3(UniformGrid3 g) : grid(g), coeffs(grid.size()) {}

LineGrid::LineGrid(int m, double s_max) : m_(m), s_max_(s_max) {
  if (!is_power_of_two(m) || m < 16)
    throw std::invalid_argument("LineGrid: m must be a power of two >= 16, got " +
                                std::to_string(m));
  if (!(s_max > 0.0)) throw std::invalid_argument("LineGrid: s_max must be positive");
  spacing_ = 2.0 * s_max_ / m_;
}

double boundary_max_abs(const ScalarField3& f) {
  const int n = f.grid.n();
  double mx = 0.0;
  auto consider = [&](int i, int j, int k) {
    double a = std::fabs(f(i, j, k));
    if (a > mx) mx = a;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      consider(i, j, 0);
      consider(i, j, n - 1);
      consider(i, 0, j);
      consider(i, n - 1, j);
      consider(0, i, j);
      consider(n - 1, i, j);
    }
  return mx;
}

void check_boundary_decay(const ScalarField3& f, Diagnostics* diag, double threshold) {
  if (!diag) return;
  double b = boundary_max_abs(f);
  if (b > threshold)
    diag->warn("boundary decay " + std::to_string(b) + " exceeds threshold " +
               std::to_string(threshold) + "; whole-space integrals are degraded");
}

}  // namespace radfield
