#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "radfield/grid.hpp"

namespace radfield {

// Not-a-knot cubic spline on a uniform grid. Reproduces cubic polynomials
// exactly at the nodes and evaluates to 0 outside the grid extent (fields
// are compactly supported in practice).
class CubicSpline1D {
 public:
  CubicSpline1D(double x0, double spacing, std::span<const double> values);

  double operator()(double x) const;
  double derivative(double x) const;

  double x_min() const { return x0_; }
  double x_max() const { return x0_ + h_ * (static_cast<double>(n_) - 1); }

 private:
  double x0_;
  double h_;
  int n_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at nodes
};

// Cubic interpolation of line-grid samples; out-of-range queries return 0.
double interp1(std::span<const double> samples, const LineGrid& grid, double s);

// Trilinear interpolation of Fourier coefficients at an arbitrary frequency.
// Queries outside the frequency box return 0.
std::complex<double> interp3(const SpectralField3& F, const std::array<double, 3>& xi);

// Trilinear interpolation of a real-space field; outside the box returns 0.
double interp3_real(const ScalarField3& f, const std::array<double, 3>& x);

}  // namespace radfield
