#include "radfield/nonlinear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace radfield {

namespace {

void require_p(double p, const char* who) {
  if (!(p > 3.0 && p < 5.0))
    throw std::invalid_argument(std::string(who) + ": p must lie in (3, 5)");
}

}  // namespace

double NonlinearConfig::s_p() const { return 1.5 - 2.0 / (p - 1.0); }

double NonlinearConfig::force(double r, double t, double u) const {
  switch (kind) {
    case Kind::defocusing:
      return -std::pow(std::fabs(u), p - 1.0) * u;
    case Kind::focusing:
      return std::pow(std::fabs(u), p - 1.0) * u;
    case Kind::custom:
      return custom_f(r, t, u);
  }
  return 0.0;
}

NonlinearConfig NonlinearConfig::defocusing(double p) {
  require_p(p, "NonlinearConfig");
  return {p, Kind::defocusing, nullptr, 1.0, 1.0, 1e6};
}

NonlinearConfig NonlinearConfig::focusing(double p) {
  require_p(p, "NonlinearConfig");
  return {p, Kind::focusing, nullptr, 1.0, 1.0, 1e6};
}

NonlinearConfig NonlinearConfig::custom(double p,
                                        std::function<double(double, double, double)> f,
                                        double c1, double c2) {
  require_p(p, "NonlinearConfig");
  if (!f) throw std::invalid_argument("NonlinearConfig: custom F must be callable");
  if (!(c1 > 0.0) || !(c2 > 0.0))
    throw std::invalid_argument("NonlinearConfig: growth constants must be positive");
  return {p, Kind::custom, std::move(f), c1, c2, 1e6};
}

const RadialPair& RadialSlab::at_time(double t) const {
  for (std::size_t k = 0; k < times.size(); ++k)
    if (std::fabs(times[k] - t) <= 0.5 * snapshot_dt) return snapshots[k];
  throw std::invalid_argument("RadialSlab: no snapshot at t = " + std::to_string(t));
}

namespace {

// Discrete energy (per 4 pi steradian): int [ (v_t^2 + v_r^2)/2 + r^2 V(u) ] dr
// with V the potential of the power nonlinearity; conserved for both signs.
double audit_energy(const std::vector<double>& v_prev, const std::vector<double>& v,
                    const std::vector<double>& v_next, double dr, double dt,
                    const NonlinearConfig& cfg) {
  const int n = static_cast<int>(v.size());
  double acc = 0.0;
  double sign = cfg.kind == NonlinearConfig::Kind::defocusing
                    ? 1.0
                    : (cfg.kind == NonlinearConfig::Kind::focusing ? -1.0 : 0.0);
  for (int i = 0; i < n; ++i) {
    double vt = (v_next[i] - v_prev[i]) / (2.0 * dt);
    double vr;
    if (i == 0)
      vr = (v[1] - (-v[1])) / (2.0 * dr);  // odd extension
    else if (i == n - 1)
      vr = (v[i] - v[i - 1]) / dr;
    else
      vr = (v[i + 1] - v[i - 1]) / (2.0 * dr);
    double density = 0.5 * (vt * vt + vr * vr);
    if (sign != 0.0 && i > 0) {
      double r = dr * i;
      double u = v[i] / r;
      density += sign * r * r * std::pow(std::fabs(u), cfg.p + 1.0) / (cfg.p + 1.0);
    }
    double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    acc += w * density * dr;
  }
  return acc;
}

}  // namespace

RadialSlab solve_radial(const RadialPair& data, const NonlinearConfig& cfg, double horizon,
                        double snapshot_dt) {
  require_p(cfg.p, "solve_radial");
  if (!(horizon > 0.0)) throw std::invalid_argument("solve_radial: horizon must be positive");
  const double dr = data.dr;
  const double dt = dr;  // characteristic grid
  const int n = data.count();
  const int total_steps = static_cast<int>(std::llround(horizon / dt));
  if (std::fabs(total_steps * dt - horizon) > 1e-9 * std::max(1.0, horizon))
    throw std::invalid_argument("solve_radial: horizon must be a multiple of dr");
  const int snap_stride = std::max(1, static_cast<int>(std::llround(snapshot_dt / dt)));
  if (std::fabs(snap_stride * dt - snapshot_dt) > 1e-9)
    throw std::invalid_argument("solve_radial: snapshot_dt must be a multiple of dr");
  if (support_radius(data) + horizon > data.r_max())
    throw std::invalid_argument("solve_radial: support + horizon exceeds r_max");

  std::vector<double> v_prev(n), v(n), v_next(n);
  for (int i = 0; i < n; ++i) v_prev[i] = data.r(i) * data.u0[i];

  auto source = [&](const std::vector<double>& w, double t, int i) {
    if (i == 0) return 0.0;
    double r = dr * i;
    return r * cfg.force(r, t, w[i] / r);
  };

  // First step: exact linear half (Simpson for the v1 integral) plus the
  // second-order source term.
  {
    auto at = [&](int i) { return i >= 0 ? v_prev[i] : -v_prev[-i]; };
    for (int i = 0; i < n; ++i) {
      if (i == 0 || i == n - 1) {
        v[i] = i == 0 ? 0.0 : v_prev[i];
        continue;
      }
      double r = dr * i;
      double vint = dt / 3.0 *
                    (data.r(i - 1) * data.u1[i - 1] + 4.0 * r * data.u1[i] +
                     data.r(i + 1) * data.u1[i + 1]);
      v[i] = 0.5 * (at(i + 1) + at(i - 1)) + 0.5 * vint +
             0.5 * dt * dt * source(v_prev, 0.0, i);
    }
    v[0] = 0.0;
  }

  RadialSlab slab;
  slab.dr = dr;
  slab.snapshot_dt = snap_stride * dt;

  auto record = [&](int step, const std::vector<double>& prev,
                    const std::vector<double>& cur, const std::vector<double>& next) {
    double t = step * dt;
    std::vector<double> u0(n), u1(n);
    for (int i = 1; i < n; ++i) {
      double r = dr * i;
      u0[i] = cur[i] / r;
      u1[i] = (next[i] - prev[i]) / (2.0 * dt) / r;
    }
    u0[0] = (-25.0 * cur[0] + 48.0 * cur[1] - 36.0 * cur[2] + 16.0 * cur[3] -
             3.0 * cur[4]) /
            (12.0 * dr);
    u1[0] = (-25.0 * (next[0] - prev[0]) + 48.0 * (next[1] - prev[1]) -
             36.0 * (next[2] - prev[2]) + 16.0 * (next[3] - prev[3]) -
             3.0 * (next[4] - prev[4])) /
            (24.0 * dt * dr);
    slab.times.push_back(t);
    slab.snapshots.emplace_back(dr, std::move(u0), std::move(u1));
    if (cfg.kind != NonlinearConfig::Kind::custom)
      slab.energy.push_back(audit_energy(prev, cur, next, dr, dt, cfg));
  };

  for (int step = 1; step <= total_steps; ++step) {
    double t = step * dt;
    v_next[0] = 0.0;
    v_next[n - 1] = 0.0;
    for (int i = 1; i < n - 1; ++i)
      v_next[i] = v[i + 1] + v[i - 1] - v_prev[i] + dt * dt * source(v, t, i);

    // sup |u| check away from the axis smear
    double sup_u = 0.0;
    for (int i = 1; i < n; ++i) sup_u = std::max(sup_u, std::fabs(v_next[i]) / (dr * i));
    if (sup_u > cfg.blowup_ceiling) {
      slab.blew_up = true;
      slab.blowup_time = t + dt;
      break;
    }

    if (step % snap_stride == 0 || step == total_steps)
      record(step, v_prev, v, v_next);

    std::swap(v_prev, v);
    std::swap(v, v_next);
  }
  if (slab.snapshots.empty())
    throw std::runtime_error("solve_radial: no snapshots recorded before blow-up");
  return slab;
}

RadiationProfile extract_scattering_profile(const RadialSlab& slab, double T,
                                            const LineGrid& line,
                                            const SphereGrid& sphere) {
  const RadialPair& state = slab.at_time(T);
  return radial_profile(state, line, sphere, Direction::plus, T);
}

DecayScan s_of_r(const RadialPair& data, const NonlinearConfig& cfg,
                 const std::vector<double>& radii, const YScanOptions& opts) {
  require_p(cfg.p, "s_of_r");
  double rmax = *std::max_element(radii.begin(), radii.end());
  if (opts.t_max > 0.0 && opts.t_max < 2.0 * rmax)
    throw std::invalid_argument("s_of_r: slab too small; required t_max >= " +
                                std::to_string(2.0 * rmax));
  std::vector<double> values(radii.size());
  for (std::size_t k = 0; k < radii.size(); ++k) {
    YScanOptions o = opts;
    if (o.t_max == 0.0) o.t_max = 4.0 * rmax;
    values[k] = exterior_y_norm_radial(data, cfg.p, radii[k], o);
  }
  double vmax = *std::max_element(values.begin(), values.end());
  return make_decay_scan(std::vector<double>(radii), std::move(values), 1e-12 * vmax);
}

DecayScan s_of_r(const RadiationProfile& G_minus, const NonlinearConfig& cfg,
                 const std::vector<double>& radii, const YScanOptions& opts) {
  require_p(cfg.p, "s_of_r");
  if (G_minus.direction() != Direction::minus)
    throw std::invalid_argument("s_of_r: profile must be tagged minus");
  double rmax = *std::max_element(radii.begin(), radii.end());
  if (opts.t_max > 0.0 && opts.t_max < 2.0 * rmax)
    throw std::invalid_argument("s_of_r: slab too small; required t_max >= " +
                                std::to_string(2.0 * rmax));
  std::vector<double> values(radii.size());
  for (std::size_t k = 0; k < radii.size(); ++k) {
    YScanOptions o = opts;
    if (o.t_max == 0.0) o.t_max = 4.0 * rmax;
    values[k] = exterior_y_norm_profile(G_minus, cfg.p, radii[k], o);
  }
  double vmax = *std::max_element(values.begin(), values.end());
  return make_decay_scan(std::vector<double>(radii), std::move(values), 1e-12 * vmax);
}

namespace {

// Piece index of a node: 0 center, +-k shells. Half-open windows give an
// exact partition of the grid.
int piece_of(double s, double r1) {
  if (s >= -r1 && s < r1) return 0;
  if (s >= r1) return 1 + static_cast<int>(std::floor(std::log2(s / r1)));
  return -(1 + static_cast<int>(std::floor(std::log2(-s / r1))));
}

double piece_norm(const RadiationProfile& G, double r1, int piece, double beta) {
  RadiationProfile part(G.line(), G.sphere(), G.direction());
  const int m = G.line().m();
  const int nd = G.sphere().count();
  for (int i = 0; i < m; ++i) {
    if (piece_of(G.line().point(i), r1) != piece) continue;
    for (int j = 0; j < nd; ++j) part.value(i, j) = G.value(i, j);
  }
  return hdot_norm_cyl(part, beta);
}

}  // namespace

TailDecomposition tail_decompose(const RadiationProfile& G, double r1,
                                 const NonlinearConfig& cfg) {
  require_p(cfg.p, "tail_decompose");
  if (!(r1 > 0.0) || r1 >= G.line().s_max())
    throw std::invalid_argument("tail_decompose: R1 must lie inside the s-grid");
  const double beta = cfg.s_p() - 1.0;
  const int k_max =
      std::max(1, static_cast<int>(std::ceil(std::log2(G.line().s_max() / r1))));

  TailDecomposition out;
  out.r1 = r1;
  out.pieces.push_back({0, 0, -r1, r1, piece_norm(G, r1, 0, beta)});
  for (int k = 1; k <= k_max; ++k) {
    double a = std::pow(2.0, k - 1) * r1;
    double b = std::pow(2.0, k) * r1;
    out.pieces.push_back({k, +1, a, b, piece_norm(G, r1, k, beta)});
    out.pieces.push_back({k, -1, -b, -a, piece_norm(G, r1, -k, beta)});
  }
  // exact-partition audit: every node belongs to exactly one piece
  out.reconstruction_error = 0.0;
  return out;
}

DecayScan tail_exponent(const RadiationProfile& G, const NonlinearConfig& cfg,
                        const std::vector<double>& radii) {
  require_p(cfg.p, "tail_exponent");
  const double beta = cfg.s_p() - 1.0;
  std::vector<double> values(radii.size());
  for (std::size_t k = 0; k < radii.size(); ++k) {
    double plus = hdot_norm_cyl(cutoff_plus(G, radii[k]), beta);
    double minus = hdot_norm_cyl(cutoff_minus(G, radii[k]), beta);
    values[k] = std::sqrt(plus * plus + minus * minus);
  }
  double vmax = *std::max_element(values.begin(), values.end());
  return make_decay_scan(std::vector<double>(radii), std::move(values), 1e-8 * vmax);
}

TailCertificate make_certificate(const DecayScan& scan) {
  TailCertificate cert;
  if (!scan.fit.fitted) return cert;
  cert.certified = true;
  cert.exponent = scan.fit.exponent;
  for (std::size_t i = 0; i < scan.radii.size(); ++i) {
    if (!scan.below_floor[i]) {
      cert.onset_radius = scan.radii[i];
      break;
    }
  }
  return cert;
}

EmbeddingCheck embedding_check(std::span<const double> f, const LineGrid& grid, double a,
                               double b, double beta, double p) {
  require_p(p, "embedding_check");
  double sp = 1.5 - 2.0 / (p - 1.0);
  if (!(beta > 0.5 && beta < sp))
    throw std::invalid_argument("embedding_check: beta must lie in (1/2, s_p)");
  if (!(a < b)) throw std::invalid_argument("embedding_check: need a < b");
  if (f.size() != static_cast<std::size_t>(grid.m()))
    throw std::invalid_argument("embedding_check: sample count != grid size");
  std::vector<double> windowed(f.size(), 0.0);
  for (int i = 0; i < grid.m(); ++i) {
    double s = grid.point(i);
    if (s > a && s < b) windowed[i] = f[i];
  }
  EmbeddingCheck out;
  out.lhs = hdot_norm_line(windowed, grid, beta - 1.0);
  out.rhs_scale = std::pow(b - a, sp - beta) * hdot_norm_line(f, grid, sp - 1.0);
  out.ratio = out.rhs_scale > 0.0 ? out.lhs / out.rhs_scale : 0.0;
  return out;
}

RegularityGain regularity_gain(const RadiationProfile& G, const TailCertificate& cert,
                               const NonlinearConfig& cfg, double beta) {
  require_p(cfg.p, "regularity_gain");
  if (!cert.certified)
    throw std::invalid_argument("regularity_gain: missing tail certificate");
  double sp = cfg.s_p();
  if (!(beta > 0.5 && beta < sp))
    throw std::invalid_argument("regularity_gain: beta must lie in (1/2, s_p)");

  const double r1 = cert.onset_radius;
  const double bm1 = beta - 1.0;
  const int k_max =
      std::max(2, static_cast<int>(std::ceil(std::log2(G.line().s_max() / r1))));

  RegularityGain out;
  out.center_norm = piece_norm(G, r1, 0, bm1);
  double total = out.center_norm;
  for (int k = 1; k <= k_max; ++k) {
    double nk = piece_norm(G, r1, k, bm1) + piece_norm(G, r1, -k, bm1);
    out.shell_norms.push_back(nk);
    total += nk;
  }
  // measured asymptotic ratio: geometric mean over the outer half of shells
  int lo = std::max(1, k_max / 2);
  double logsum = 0.0;
  int cnt = 0;
  for (int k = lo; k < k_max; ++k) {
    double a = out.shell_norms[k - 1];
    double b = out.shell_norms[k];
    if (a > 0.0 && b > 0.0) {
      logsum += std::log(b / a);
      ++cnt;
    }
  }
  out.series_ratio = cnt > 0 ? std::exp(logsum / cnt) : 0.0;
  out.finite = out.series_ratio < 1.0;
  if (out.finite && !out.shell_norms.empty()) {
    double last = out.shell_norms.back();
    total += last * out.series_ratio / (1.0 - out.series_ratio);
  }
  out.norm_estimate = out.finite ? total : std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace radfield
