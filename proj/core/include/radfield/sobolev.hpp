#pragma once

#include <span>
#include <string>
#include <vector>

#include "radfield/diagnostics.hpp"
#include "radfield/grid.hpp"
#include "radfield/sphere.hpp"

namespace radfield {

// Which time direction a radiation profile describes.
enum class Direction { plus, minus };

inline const char* to_string(Direction d) { return d == Direction::plus ? "plus" : "minus"; }

// The state of a wave at one time: (u0, u1) with its Sobolev exponent tag.
struct DataPair {
  DataPair(ScalarField3 u0_, ScalarField3 u1_, double beta_);

  ScalarField3 u0;
  ScalarField3 u1;
  double beta;
};

// Samples G(s_i, omega_j) on a line grid x sphere quadrature. Rows are
// per-direction and contiguous in s: values[j * m + i].
class RadiationProfile {
 public:
  RadiationProfile(LineGrid line, SphereGrid sphere, Direction direction);
  RadiationProfile(LineGrid line, SphereGrid sphere, Direction direction,
                   std::vector<double> values);

  const LineGrid& line() const { return line_; }
  const SphereGrid& sphere() const { return sphere_; }
  Direction direction() const { return direction_; }
  void set_direction(Direction d) { direction_ = d; }

  double value(int i_s, int j_dir) const {
    return values_[static_cast<std::size_t>(j_dir) * line_.m() + i_s];
  }
  double& value(int i_s, int j_dir) {
    return values_[static_cast<std::size_t>(j_dir) * line_.m() + i_s];
  }
  std::span<const double> row(int j_dir) const {
    return {values_.data() + static_cast<std::size_t>(j_dir) * line_.m(),
            static_cast<std::size_t>(line_.m())};
  }
  std::span<double> row(int j_dir) {
    return {values_.data() + static_cast<std::size_t>(j_dir) * line_.m(),
            static_cast<std::size_t>(line_.m())};
  }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  // True when every s-row is constant across directions.
  bool is_zonal(double tol = 0.0) const;

 private:
  LineGrid line_;
  SphereGrid sphere_;
  Direction direction_;
  std::vector<double> values_;
};

// Homogeneous Sobolev norm on R^3 via the |xi|^{2 beta}-weighted Plancherel
// sum; the xi = 0 mode is excluded. beta must lie in [-1, 1].
double hdot_norm_r3(const ScalarField3& f, double beta, Diagnostics* diag = nullptr);

// sqrt(|u0|_{H^beta}^2 + |u1|_{H^{beta-1}}^2), beta from the pair tag.
double pair_norm(const DataPair& p, Diagnostics* diag = nullptr);
double pair_norm(const DataPair& p, double beta, Diagnostics* diag = nullptr);

// 1D homogeneous norm of line-grid samples (nu = 0 mode excluded).
double hdot_norm_line(std::span<const double> samples, const LineGrid& grid, double beta);

// L^2(S^2; H^beta(R)) norm: sphere-weighted sum of per-direction 1D norms.
// beta must lie in (-1, 1).
double hdot_norm_cyl(const RadiationProfile& G, double beta);

// Fractional s-derivative: multiplier |nu|^alpha on the partial transform,
// with the nu = 0 mode set to zero. |alpha| <= 1.
RadiationProfile ds_frac(const RadiationProfile& G, double alpha);

// Sharp cut-offs in s (characteristic functions evaluated at the nodes):
// keep s > r, keep s < -r, keep a < s < b.
RadiationProfile cutoff_plus(const RadiationProfile& G, double r);
RadiationProfile cutoff_minus(const RadiationProfile& G, double r);
RadiationProfile cutoff_window(const RadiationProfile& G, double a, double b);

}  // namespace radfield
