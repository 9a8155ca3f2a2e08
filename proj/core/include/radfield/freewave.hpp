#pragma once

#include <vector>

#include "radfield/diagnostics.hpp"
#include "radfield/grid.hpp"
#include "radfield/interp.hpp"
#include "radfield/sobolev.hpp"

namespace radfield {

// Radial data sampled on r_i = i * dr, i = 0..count-1. The reduction
// v = r u is odd across r = 0, so v(0) = 0 automatically.
struct RadialPair {
  RadialPair(double dr_, std::vector<double> u0_, std::vector<double> u1_);

  int count() const { return static_cast<int>(u0.size()); }
  double r_max() const { return dr * (count() - 1); }
  double r(int i) const { return dr * i; }

  double dr;
  std::vector<double> u0;
  std::vector<double> u1;
};

// Largest radius carrying data above tol * max amplitude.
double support_radius(const RadialPair& p, double tol = 1e-10);

// Exact d'Alembert evaluation of the radial free wave: splines of v0, v1,
// the cumulative integral of v1, and the stencil derivative of v0, each
// extended by parity (v odd, its antiderivative even, constant past r_max).
class RadialWave {
 public:
  explicit RadialWave(const RadialPair& p);

  double v(double r, double t) const;
  double v_t(double r, double t) const;
  double v0(double s) const;       // odd extension
  double v0_prime(double s) const; // even extension
  double v1(double s) const;       // odd extension
  double V1(double s) const;       // even extension of int_0^s v1

  double u(double r, double t) const;  // v/r with the r->0 limit
  double r_max() const { return r_max_; }

 private:
  double eval_odd(const CubicSpline1D& sp, double s) const;
  double eval_even(const CubicSpline1D& sp, double s) const;

  double r_max_;
  double dr_;
  double v1_total_;  // int_0^inf v1
  CubicSpline1D v0_, v1_, V1_, dv0_;
};

// Spectral solution of the linear wave equation on the periodic box:
// u^(t) = cos(t|xi|) u0^ + sin(t|xi|)/|xi| u1^. The caller declares the
// support radius of the data; |t| + support > L wraps periodic images into
// the region of interest and is reported as a warning.
DataPair evolve(const DataPair& p, double t, double support_radius,
                Diagnostics* diag = nullptr);

// d'Alembert evolution on the odd extension; requires |t| + support <= r_max.
RadialPair evolve_radial(const RadialPair& p, double t);

// Radiation profile of radial data, broadcast over the sphere grid:
//   plus:  G(s) = (v1(s) - v0'(s)) / 2
//   minus: G(s) = (v1(s) + v0'(s)) / 2
// on the odd extensions. These are the t -> +/-inf limits of d v/dt along
// s = r -/+ t and agree with the Fourier-side transform and with the d = 3
// Radon inversion formulas. `shift` evaluates at s + shift, which is the
// profile of the same wave read off from its state at time `shift`.
RadiationProfile radial_profile(const RadialPair& p, const LineGrid& line,
                                const SphereGrid& sphere, Direction direction,
                                double shift = 0.0);

}  // namespace radfield
