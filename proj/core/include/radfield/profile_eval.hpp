#pragma once

#include <array>
#include <memory>
#include <vector>

#include "radfield/interp.hpp"
#include "radfield/sobolev.hpp"

namespace radfield {

// Fourth-order cumulative integral of uniformly spaced node samples.
std::vector<double> cumulative_integral(const std::vector<double>& f, double h);

// Spline view of a radiation profile: per-direction values, spectral
// s-derivatives on demand, and (for zonal profiles) the antiderivative that
// powers the exact slice reduction of sphere integrals.
class ProfileInterpolant {
 public:
  explicit ProfileInterpolant(const RadiationProfile& G, bool with_derivative = false);

  bool zonal() const { return zonal_; }
  const RadiationProfile& profile() const { return G_; }

  double value(double s, int j) const { return splines_[zonal_ ? 0 : j](s); }
  double deriv(double s, int j) const {
    return dsplines_.empty() ? splines_[zonal_ ? 0 : j].derivative(s)
                             : dsplines_[zonal_ ? 0 : j](s);
  }

  // Bilinear sample across directions at an arbitrary unit vector.
  double angular_value(double s, const std::array<double, 3>& omega) const;

  // Zonal only: int_{-inf}^{y} g, flat beyond the grid.
  double antiderivative(double y) const;
  double total_mass() const { return total_; }

 private:
  const RadiationProfile& G_;
  bool zonal_;
  std::vector<CubicSpline1D> splines_;
  std::vector<CubicSpline1D> dsplines_;
  std::unique_ptr<CubicSpline1D> cum_spline_;
  double cum_lo_ = 0.0, cum_hi_ = 0.0;
  double total_ = 0.0;
};

}  // namespace radfield
