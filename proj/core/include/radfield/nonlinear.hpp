#pragma once

#include <functional>
#include <vector>

#include "radfield/exterior.hpp"
#include "radfield/freewave.hpp"
#include "radfield/sobolev.hpp"

namespace radfield {

// Semilinear wave equation d_t^2 u - Lap u = F(x, t, u) in R^3, p in (3, 5).
// F may depend on (r, t) so manufactured-solution forcing needs no extra
// plumbing; the growth constants describe |F| <= C1 |u|^p and the difference
// bound with constant C2.
struct NonlinearConfig {
  enum class Kind { defocusing, focusing, custom };

  double p;
  Kind kind;
  std::function<double(double r, double t, double u)> custom_f;
  double growth_c1 = 1.0;
  double growth_c2 = 1.0;
  double blowup_ceiling = 1e6;

  double s_p() const;
  double force(double r, double t, double u) const;

  static NonlinearConfig defocusing(double p);
  static NonlinearConfig focusing(double p);
  static NonlinearConfig custom(double p, std::function<double(double, double, double)> f,
                                double c1 = 1.0, double c2 = 1.0);
};

// Trajectory of the radial solver: snapshots (u, u_t) at uniform times,
// plus the discrete energy series for the defocusing/focusing kinds.
struct RadialSlab {
  double dr = 0.0;
  double snapshot_dt = 0.0;
  std::vector<double> times;
  std::vector<RadialPair> snapshots;
  std::vector<double> energy;  // empty for custom F
  bool blew_up = false;
  double blowup_time = 0.0;

  const RadialPair& at_time(double t) const;
};

// Characteristic-grid scheme on v = r u with dt = dr: the linear part is the
// exact lattice d'Alembert relation, the source enters at second order.
// Blow-up (sup |u| past the ceiling) returns the partial trajectory flagged.
RadialSlab solve_radial(const RadialPair& data, const NonlinearConfig& cfg, double horizon,
                        double snapshot_dt);

// Plus-profile of the linear asymptote, read off the state at time T:
// the s-argument is shifted by +T so the result estimates the profile of
// the wave the solution scatters to.
RadiationProfile extract_scattering_profile(const RadialSlab& slab, double T,
                                            const LineGrid& line, const SphereGrid& sphere);

// S(r) = exterior Y-norm of the linear flow of the data, per radius.
DecayScan s_of_r(const RadialPair& data, const NonlinearConfig& cfg,
                 const std::vector<double>& radii, const YScanOptions& opts = {});
// Same, for data specified by their minus-direction radiation profile.
DecayScan s_of_r(const RadiationProfile& G_minus, const NonlinearConfig& cfg,
                 const std::vector<double>& radii, const YScanOptions& opts = {});

// Dyadic decomposition G = G0 + sum_k (Gk+ + Gk-) with center window
// [-R1, R1) and shells +-[2^{k-1} R1, 2^k R1); half-open windows make the
// pieces an exact partition at the s-nodes.
struct TailDecomposition {
  struct Piece {
    int k;        // 0 = center, k >= 1 shells
    int sign;     // 0 center, +1 / -1 shells
    double a, b;  // window
    double norm;  // H^{s_p - 1}(R x S^2) norm of the piece
  };
  double r1 = 0.0;
  std::vector<Piece> pieces;
  double reconstruction_error = 0.0;  // max node deviation of the piece sum
};
TailDecomposition tail_decompose(const RadiationProfile& G, double r1,
                                 const NonlinearConfig& cfg);

// | P_r^{+-} G |_{H^{s_p-1}} per radius (both signs combined in quadrature),
// with the fitted exponent. Values at the quadrature floor are excluded
// from the fit.
DecayScan tail_exponent(const RadiationProfile& G, const NonlinearConfig& cfg,
                        const std::vector<double>& radii);

struct TailCertificate {
  bool certified = false;
  double exponent = 0.0;
  double onset_radius = 0.0;
};
TailCertificate make_certificate(const DecayScan& scan);

// | P_{a,b} f |_{H^{beta-1}} against the (b-a)^{s_p - beta} | f |_{H^{s_p-1}}
// envelope; beta must lie in (1/2, s_p).
struct EmbeddingCheck {
  double lhs;
  double rhs_scale;
  double ratio;
};
EmbeddingCheck embedding_check(std::span<const double> f, const LineGrid& grid, double a,
                               double b, double beta, double p);

// Sums the dyadic shell norms of G in H^{beta-1}: finite iff the measured
// shell ratio stays below one; the estimate closes the series with the
// geometric tail. Requires a tail certificate and beta in (1/2, s_p).
struct RegularityGain {
  bool finite = false;
  double norm_estimate = 0.0;
  double series_ratio = 0.0;
  std::vector<double> shell_norms;  // |Gk+| + |Gk-| per k >= 1
  double center_norm = 0.0;
};
RegularityGain regularity_gain(const RadiationProfile& G, const TailCertificate& cert,
                               const NonlinearConfig& cfg, double beta);

}  // namespace radfield
