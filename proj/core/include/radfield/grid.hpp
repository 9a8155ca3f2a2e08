#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "radfield/diagnostics.hpp"

namespace radfield {

// Uniform periodic grid on the cube [-L, L)^3 with n points per axis.
// n must be a power of two (>= 8) so every transform reduces to radix-2 FFTs.
class UniformGrid3 {
 public:
  UniformGrid3(int n, double half_width);

  int n() const { return n_; }
  double half_width() const { return half_width_; }
  double spacing() const { return spacing_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_ * n_; }

  // node coordinate along one axis, i in [0, n)
  double point(int i) const { return -half_width_ + spacing_ * i; }

  // frequency of storage index k in DFT layout {0,..,n/2-1, -n/2,..,-1} * pi/L
  double freq(int k) const { return freq_spacing() * signed_index(k); }
  int signed_index(int k) const { return k < n_ / 2 ? k : k - n_; }
  double freq_spacing() const { return 3.14159265358979323846 / half_width_; }
  double nyquist() const { return freq_spacing() * (n_ / 2); }

  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }

  bool operator==(const UniformGrid3& o) const {
    return n_ == o.n_ && half_width_ == o.half_width_;
  }

 private:
  int n_;
  double half_width_;
  double spacing_;
};

// Real samples of a function on a UniformGrid3, row-major axis order.
struct ScalarField3 {
  ScalarField3(UniformGrid3 grid, std::vector<double> values);
  explicit ScalarField3(UniformGrid3 grid);  // zero field

  double operator()(int i, int j, int k) const { return values[grid.index(i, j, k)]; }
  double& at(int i, int j, int k) { return values[grid.index(i, j, k)]; }

  UniformGrid3 grid;
  std::vector<double> values;
};

// Complex Fourier coefficients in DFT storage order, continuum convention:
// coeffs[k] ~ \int e^{+i xi_k . x} u(x) dx.
struct SpectralField3 {
  SpectralField3(UniformGrid3 grid, std::vector<std::complex<double>> coeffs);
  explicit SpectralField3(UniformGrid3 grid);

  UniformGrid3 grid;
  std::vector<std::complex<double>> coeffs;
};

// Uniform grid on [-S_max, S_max) with m points (power of two, >= 16).
class LineGrid {
 public:
  LineGrid(int m, double s_max);

  int m() const { return m_; }
  double s_max() const { return s_max_; }
  double spacing() const { return spacing_; }
  double point(int i) const { return -s_max_ + spacing_ * i; }

  double freq(int l) const { return freq_spacing() * signed_index(l); }
  int signed_index(int l) const { return l < m_ / 2 ? l : l - m_; }
  double freq_spacing() const { return 3.14159265358979323846 / s_max_; }
  double nyquist() const { return freq_spacing() * (m_ / 2); }

  bool operator==(const LineGrid& o) const { return m_ == o.m_ && s_max_ == o.s_max_; }

 private:
  int m_;
  double s_max_;
  double spacing_;
};

// Largest |f| over the outermost grid layer. Operations that read the field
// as a whole-space integral check this against a decay threshold and warn.
double boundary_max_abs(const ScalarField3& f);

void check_boundary_decay(const ScalarField3& f, Diagnostics* diag,
                          double threshold = 1e-8);

}  // namespace radfield
