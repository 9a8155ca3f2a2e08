#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radfield/freewave.hpp"
#include "radfield/grid.hpp"
#include "radfield/sobolev.hpp"

namespace radfield {

// Exponents of the space-time norms for the p-th power nonlinearity:
//   Y: L^{2p/(s_p+1)}_t L^{2p/(2-s_p)}_x,  Z: L^{2/(s_p+1)}_t L^{2/(2-s_p)}_x
// with s_p = 3/2 - 2/(p-1).
struct MixedNormExponents {
  double s_p;
  double q_time;
  double q_space;
};
MixedNormExponents y_exponents(double p);
MixedNormExponents z_exponents(double p);
double critical_exponent(double p);  // s_p

// A field trajectory: data-pair snapshots at uniformly spaced times.
struct SpaceTimeSlab {
  SpaceTimeSlab(double t0_, double dt_, std::vector<DataPair> snapshots_);

  double time(int k) const { return t0 + dt * k; }
  int count() const { return static_cast<int>(snapshots.size()); }

  double t0;
  double dt;
  std::vector<DataPair> snapshots;
};

// Mixed space-time norm of u over the slab. With `exterior_r` set, the
// spatial integral is restricted to {|x| > |t| + r}; without it the norm is
// taken over the whole box.
double y_norm(const SpaceTimeSlab& slab, double p,
              std::optional<double> exterior_r = std::nullopt);
double z_norm(const SpaceTimeSlab& slab, double p,
              std::optional<double> exterior_r = std::nullopt);

// Power-law fit diagnostics for a radius scan, least squares on log-log
// with the two largest usable radii weighted twice (asymptotic regime).
struct PowerFit {
  bool fitted = false;
  double exponent = 0.0;
  double intercept = 0.0;  // ln of the prefactor
  double residual = 0.0;
  int points_used = 0;
};

struct DecayScan {
  std::vector<double> radii;
  std::vector<double> values;
  std::vector<bool> below_floor;
  double floor = 0.0;
  PowerFit fit;
};

// Builds the scan record and fits the usable points (requires >= 4).
DecayScan make_decay_scan(std::vector<double> radii, std::vector<double> values,
                          double floor);

// Quadrature controls for the profile-synthesized scans.
struct YScanOptions {
  double t_max = 0.0;     // 0: use 4 x the largest radius
  double dt = 0.25;       // time step of the outer trapezoid rule
  double rho_factor = 0.5;  // radial step = factor x line spacing
};

// Exterior Y-norm of the free wave u(x,t) = (1/2pi) int G(x.w + t, w) dw
// over {|x| > |t| + r}: radial quadrature with the exact 1/rho far field
// appended, outer time quadrature on |t| <= t_max with the analytic tail.
double exterior_y_norm_profile(const RadiationProfile& G, double p, double r,
                               const YScanOptions& opts = {});

// Same norm for the d'Alembert flow of radial data (exactly supported in
// r <= t + support, so both quadratures are finite).
double exterior_y_norm_radial(const RadialPair& data, double p, double r,
                              const YScanOptions& opts = {});

// int_{|x|>R} |T G|^6 dx per radius, with the fitted R-exponent. The profile
// must be supported in (a, b) with 0 < a < b and radii >= b.
DecayScan l6_exterior_scan(const RadiationProfile& G, const std::vector<double>& radii,
                           const YScanOptions& opts = {});

// Ratio of the measured integral to the (b-a)^2 R^{-2} |G|_{L2}^6 envelope,
// per radius (bounded ratios are the content of the estimate).
std::vector<double> l6_lemma_ratios(const RadiationProfile& G, const DecayScan& scan);

// Exterior Y-norm scan of the wave synthesized from a window-supported
// profile, with the fitted R-exponent.
DecayScan lemma_y_scan(const RadiationProfile& G, double p,
                       const std::vector<double>& radii, const YScanOptions& opts = {});

// Direct check of (sum gamma^-j a_j)^q <= (gamma/(gamma-gamma1))^q
//                  sum gamma1^{-jq} a_j^q.
struct GeometricSumCheck {
  double lhs;
  double rhs;
  bool holds;
};
GeometricSumCheck geometric_sum_check(double gamma, double gamma1, double q,
                                      const std::vector<double>& a);

// Certifies power decay S(r) <= r^-beta from samples satisfying the
// recursion S(r2) <= c [ (r1/r2)^alpha + S(r1)^l ]:
//  - audits the recursion hypothesis on sample pairs with ratio >= 4,
//  - derives the bound B(r) = min over admissible r1 of the recursion RHS,
//  - certifies the largest suffix where both B and S sit under r^-beta.
// beta targets (1 - 1/l) alpha - epsilon.
struct RecursionDecayResult {
  bool certified = false;
  double beta = 0.0;
  double onset_radius = 0.0;
  std::string detail;
};
RecursionDecayResult recursion_decay(const DecayScan& samples, double alpha, double l,
                                     double c, double epsilon = 0.05);

}  // namespace radfield
