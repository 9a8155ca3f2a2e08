#include "radfield/exterior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "radfield/parallel.hpp"
#include "radfield/profile_eval.hpp"

namespace radfield {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;

void require_p_range(double p, const char* who) {
  if (!(p > 3.0 && p < 5.0))
    throw std::invalid_argument(std::string(who) + ": p must lie in (3, 5)");
}

// Detected support [a, b] of a profile (outermost samples above the floor).
struct Support {
  double lo;
  double hi;
  double peak;
};

Support detect_support(const RadiationProfile& G, double rel_tol = 1e-12) {
  const int m = G.line().m();
  const int nd = G.sphere().count();
  double peak = 0.0;
  for (double v : G.values()) peak = std::max(peak, std::fabs(v));
  Support s{0.0, 0.0, peak};
  if (peak == 0.0) return s;
  int lo = m, hi = -1;
  for (int i = 0; i < m; ++i) {
    double row_max = 0.0;
    for (int j = 0; j < nd; ++j) row_max = std::max(row_max, std::fabs(G.value(i, j)));
    if (row_max > rel_tol * peak) {
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
  }
  s.lo = G.line().point(lo);
  s.hi = G.line().point(hi);
  return s;
}

double l2_norm_profile(const RadiationProfile& G) {
  const int m = G.line().m();
  const int nd = G.sphere().count();
  const double ds = G.line().spacing();
  double acc = 0.0;
  for (int j = 0; j < nd; ++j) {
    double row = 0.0;
    for (int i = 0; i < m; ++i) row += G.value(i, j) * G.value(i, j);
    acc += G.sphere().weight(j) * row * ds;
  }
  return std::sqrt(acc);
}

// Composite Simpson of f on [a, b] with at least n_min panels (made even).
template <typename F>
double simpson(F&& f, double a, double b, int n_min) {
  if (!(b > a)) return 0.0;
  int n = std::max(2, n_min + (n_min & 1));
  double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + h * i) * (i & 1 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Synthesized zonal wave u(rho, t) = [A(rho+t) - A(t-rho)] / rho, with the
// exact total-mass/rho far field.
struct ZonalWave {
  const ProfileInterpolant& ev;
  double operator()(double rho, double t) const {
    if (rho < 1e-9) return 2.0 * ev.value(t, 0);
    return (ev.antiderivative(rho + t) - ev.antiderivative(t - rho)) / rho;
  }
};

// Generic point evaluation of (1/2pi) int G(rho eta.w + t, w) dw by the
// slice reduction: s-integral over the support at line-grid spacing, ring
// average in the azimuth around eta.
class GeneralWave {
 public:
  GeneralWave(const ProfileInterpolant& ev, const std::array<double, 3>& eta)
      : ev_(ev), eta_(eta) {
    // orthonormal frame (e1, e2, eta)
    std::array<double, 3> up = std::fabs(eta[2]) < 0.9 ? std::array<double, 3>{0, 0, 1}
                                                       : std::array<double, 3>{1, 0, 0};
    e1_ = cross(up, eta);
    normalize(e1_);
    e2_ = cross(eta, e1_);
    const int n_phi = ev.profile().sphere().n_phi();
    cphi_.resize(n_phi);
    sphi_.resize(n_phi);
    for (int k = 0; k < n_phi; ++k) {
      double phi = 2.0 * kPi * k / n_phi;
      cphi_[k] = std::cos(phi);
      sphi_[k] = std::sin(phi);
    }
  }

  double operator()(double rho, double t) const {
    const auto& line = ev_.profile().line();
    if (rho < 1e-9) {
      const auto& sph = ev_.profile().sphere();
      double acc = 0.0;
      for (int j = 0; j < sph.count(); ++j) acc += sph.weight(j) * ev_.value(t, j);
      return acc / (2.0 * kPi);
    }
    double lo = std::max(line.point(0), t - rho);
    double hi = std::min(line.point(line.m() - 1), t + rho);
    if (lo >= hi) return 0.0;
    const double ds = line.spacing();
    int steps = std::max(8, static_cast<int>(std::ceil((hi - lo) / ds)) * 2);
    double acc = simpson(
        [&](double s) {
          double mu = (s - t) / rho;
          mu = std::clamp(mu, -1.0, 1.0);
          return ring_average(s, mu);
        },
        lo, hi, steps);
    return acc / (2.0 * kPi * rho);
  }

  // Coefficient of the 1/rho far field: equatorial average of the
  // per-direction mass, which the s-integral collapses to as rho grows.
  double far_coefficient(const std::vector<double>& masses) const {
    const auto& sph = ev_.profile().sphere();
    const int n_phi = sph.n_phi();
    double acc = 0.0;
    for (int k = 0; k < n_phi; ++k) {
      auto st = sph.stencil(direction(0.0, k));
      double v = 0.0;
      for (int q = 0; q < 4; ++q) v += st.weight[q] * masses[st.index[q]];
      acc += v;
    }
    return acc / n_phi;
  }

 private:
  static std::array<double, 3> cross(const std::array<double, 3>& a,
                                     const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
  }
  static void normalize(std::array<double, 3>& a) {
    double n = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    for (auto& x : a) x /= n;
  }

  std::array<double, 3> direction(double mu, int k) const {
    double st = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    return {mu * eta_[0] + st * (cphi_[k] * e1_[0] + sphi_[k] * e2_[0]),
            mu * eta_[1] + st * (cphi_[k] * e1_[1] + sphi_[k] * e2_[1]),
            mu * eta_[2] + st * (cphi_[k] * e1_[2] + sphi_[k] * e2_[2])};
  }

  double ring_average(double s, double mu) const {
    const int n_phi = static_cast<int>(cphi_.size());
    double acc = 0.0;
    for (int k = 0; k < n_phi; ++k) acc += ev_.angular_value(s, direction(mu, k));
    return 2.0 * kPi * acc / n_phi;
  }

  const ProfileInterpolant& ev_;
  std::array<double, 3> eta_, e1_, e2_;
  std::vector<double> cphi_, sphi_;
};

std::vector<double> per_direction_masses(const RadiationProfile& G) {
  const int m = G.line().m();
  const int nd = G.sphere().count();
  const double ds = G.line().spacing();
  std::vector<double> mass(nd, 0.0);
  for (int j = 0; j < nd; ++j) {
    double acc = 0.0;
    for (int i = 0; i < m; ++i) acc += G.value(i, j);
    mass[j] = acc * ds;
  }
  return mass;
}

// int_a^inf rho^2 |u(rho)|^qx drho where u = kappa/rho exactly past far_from.
template <typename U>
double radial_power_integral(U&& u, double t, double a, double far_from, double kappa,
                             double qx, double step) {
  double acc = 0.0;
  if (far_from > a) {
    int n = std::max(16, static_cast<int>(std::ceil((far_from - a) / step)));
    acc += simpson(
        [&](double rho) { return rho * rho * std::pow(std::fabs(u(rho, t)), qx); }, a,
        far_from, n);
  }
  double P = std::max(a, far_from);
  acc += std::pow(std::fabs(kappa), qx) * std::pow(P, 3.0 - qx) / (qx - 3.0);
  return acc;
}

}  // namespace

double critical_exponent(double p) {
  require_p_range(p, "critical_exponent");
  return 1.5 - 2.0 / (p - 1.0);
}

MixedNormExponents y_exponents(double p) {
  double sp = critical_exponent(p);
  return {sp, 2.0 * p / (sp + 1.0), 2.0 * p / (2.0 - sp)};
}

MixedNormExponents z_exponents(double p) {
  double sp = critical_exponent(p);
  return {sp, 2.0 / (sp + 1.0), 2.0 / (2.0 - sp)};
}

SpaceTimeSlab::SpaceTimeSlab(double t0_, double dt_, std::vector<DataPair> snapshots_)
    : t0(t0_), dt(dt_), snapshots(std::move(snapshots_)) {
  if (!(dt > 0.0)) throw std::invalid_argument("SpaceTimeSlab: dt must be positive");
  if (snapshots.size() < 2)
    throw std::invalid_argument("SpaceTimeSlab: need at least two snapshots");
  for (const auto& s : snapshots)
    if (!(s.u0.grid == snapshots.front().u0.grid))
      throw std::invalid_argument("SpaceTimeSlab: snapshots on different grids");
}

namespace {

double mixed_norm(const SpaceTimeSlab& slab, double q_time, double q_space,
                  std::optional<double> exterior_r) {
  const UniformGrid3& grid = slab.snapshots.front().u0.grid;
  const int n = grid.n();
  const double h3 = std::pow(grid.spacing(), 3);
  double outer = 0.0;
  for (int k = 0; k < slab.count(); ++k) {
    const double t = slab.time(k);
    const auto& u = slab.snapshots[k].u0;
    double cut2 = -1.0;
    if (exterior_r) {
      double cut = std::fabs(t) + *exterior_r;
      cut2 = cut * cut;
    }
    double inner = parallel_reduce(grid.size(), [&](std::size_t lo, std::size_t hi) {
      double acc = 0.0;
      for (std::size_t idx = lo; idx < hi; ++idx) {
        if (cut2 >= 0.0) {
          int kz = static_cast<int>(idx % n);
          int jy = static_cast<int>((idx / n) % n);
          int ix = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
          double x = grid.point(ix), y = grid.point(jy), z = grid.point(kz);
          if (x * x + y * y + z * z <= cut2) continue;
        }
        acc += std::pow(std::fabs(u.values[idx]), q_space);
      }
      return acc;
    });
    double Ix = std::pow(h3 * inner, 1.0 / q_space);
    double w = (k == 0 || k == slab.count() - 1) ? 0.5 : 1.0;
    outer += w * std::pow(Ix, q_time) * slab.dt;
  }
  return std::pow(outer, 1.0 / q_time);
}

}  // namespace

double y_norm(const SpaceTimeSlab& slab, double p, std::optional<double> exterior_r) {
  auto e = y_exponents(p);
  return mixed_norm(slab, e.q_time, e.q_space, exterior_r);
}

double z_norm(const SpaceTimeSlab& slab, double p, std::optional<double> exterior_r) {
  auto e = z_exponents(p);
  return mixed_norm(slab, e.q_time, e.q_space, exterior_r);
}

DecayScan make_decay_scan(std::vector<double> radii, std::vector<double> values,
                          double floor) {
  if (radii.size() != values.size())
    throw std::invalid_argument("make_decay_scan: radii/values size mismatch");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1]))
      throw std::invalid_argument("make_decay_scan: radii must be strictly increasing");
  DecayScan scan;
  scan.radii = std::move(radii);
  scan.values = std::move(values);
  scan.floor = floor;
  scan.below_floor.resize(scan.values.size());
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < scan.values.size(); ++i) {
    scan.below_floor[i] = !(scan.values[i] > floor);
    if (!scan.below_floor[i]) {
      lx.push_back(std::log(scan.radii[i]));
      ly.push_back(std::log(scan.values[i]));
    }
  }
  const int used = static_cast<int>(lx.size());
  scan.fit.points_used = used;
  if (used >= 4) {
    // two largest radii weighted double (asymptotic regime)
    std::vector<double> w(used, 1.0);
    w[used - 1] = 2.0;
    w[used - 2] = 2.0;
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < used; ++i) {
      sw += w[i];
      sx += w[i] * lx[i];
      sy += w[i] * ly[i];
      sxx += w[i] * lx[i] * lx[i];
      sxy += w[i] * lx[i] * ly[i];
    }
    double det = sw * sxx - sx * sx;
    scan.fit.exponent = (sw * sxy - sx * sy) / det;
    scan.fit.intercept = (sxx * sy - sx * sxy) / det;
    double r2 = 0.0;
    for (int i = 0; i < used; ++i) {
      double e = ly[i] - (scan.fit.intercept + scan.fit.exponent * lx[i]);
      r2 += w[i] * e * e;
    }
    scan.fit.residual = std::sqrt(r2 / sw);
    scan.fit.fitted = true;
  }
  return scan;
}

double exterior_y_norm_profile(const RadiationProfile& G, double p, double r,
                               const YScanOptions& opts) {
  auto e = y_exponents(p);
  const double qt = e.q_time, qx = e.q_space;
  ProfileInterpolant ev(G, false);
  const auto& line = G.line();
  const double t_max = opts.t_max > 0.0 ? opts.t_max : 4.0 * std::max(r, 1.0);
  const double step = std::max(opts.rho_factor * line.spacing(),
                               (line.s_max() + t_max) / 16384.0);

  auto inner_pow = [&](double t) {
    const double a = std::fabs(t) + r;
    const double far_from = std::fabs(t) + line.s_max();
    if (ev.zonal()) {
      ZonalWave u{ev};
      return 4.0 * kPi *
             radial_power_integral(u, t, a, far_from, ev.total_mass(), qx, step);
    }
    const auto& sph = G.sphere();
    std::vector<double> masses = per_direction_masses(G);
    double acc = 0.0;
    for (int j = 0; j < sph.count(); ++j) {
      GeneralWave u(ev, sph.node(j));
      double kappa = u.far_coefficient(masses);
      acc += sph.weight(j) *
             radial_power_integral(u, t, a, far_from, kappa, qx, step);
    }
    return acc;
  };

  // trapezoid over [-t_max, t_max]
  const int nt = std::max(8, static_cast<int>(std::ceil(2.0 * t_max / opts.dt)));
  const double dt = 2.0 * t_max / nt;
  std::vector<double> vals(nt + 1);
  parallel_for(nt + 1, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k)
      vals[k] = std::pow(inner_pow(-t_max + dt * k), qt / qx);
  });
  double outer = 0.0;
  for (int k = 0; k <= nt; ++k) outer += (k == 0 || k == nt ? 0.5 : 1.0) * vals[k] * dt;

  // analytic |t| > t_max tail from the 1/rho far field
  double kappa = ev.zonal() ? std::fabs(ev.total_mass()) : 0.0;
  if (!ev.zonal()) {
    std::vector<double> masses = per_direction_masses(G);
    double acc = 0.0;
    for (int j = 0; j < G.sphere().count(); ++j) {
      GeneralWave u(ev, G.sphere().node(j));
      acc += G.sphere().weight(j) * std::fabs(u.far_coefficient(masses));
    }
    kappa = acc / (4.0 * kPi);
  }
  if (kappa > 0.0) {
    double C0 = 4.0 * kPi * std::pow(kappa, qx) / (qx - 3.0);
    double ee = (3.0 - qx) * qt / qx;  // < -1
    outer += 2.0 * std::pow(C0, qt / qx) * std::pow(t_max + r, ee + 1.0) / (-(ee + 1.0));
  }
  return std::pow(outer, 1.0 / qt);
}

double exterior_y_norm_radial(const RadialPair& data, double p, double r,
                              const YScanOptions& opts) {
  auto e = y_exponents(p);
  const double qt = e.q_time, qx = e.q_space;
  RadialWave wave(data);
  const double supp = support_radius(data);
  const double t_max = opts.t_max > 0.0 ? opts.t_max : 4.0 * std::max(r, 1.0);
  const double step = std::max(opts.rho_factor * data.dr, supp / 8192.0);

  auto inner_pow = [&](double t) {
    double a = std::fabs(t) + r;
    double b = std::fabs(t) + supp + 2.0 * data.dr;
    if (a >= b) return 0.0;
    int n = std::max(16, static_cast<int>(std::ceil((b - a) / step)));
    return 4.0 * kPi *
           simpson(
               [&](double rho) {
                 return rho * rho * std::pow(std::fabs(wave.u(rho, t)), qx);
               },
               a, b, n);
  };

  const int nt = std::max(8, static_cast<int>(std::ceil(2.0 * t_max / opts.dt)));
  const double dt = 2.0 * t_max / nt;
  std::vector<double> vals(nt + 1);
  parallel_for(nt + 1, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k)
      vals[k] = std::pow(inner_pow(-t_max + dt * k), qt / qx);
  });
  double outer = 0.0;
  for (int k = 0; k <= nt; ++k) outer += (k == 0 || k == nt ? 0.5 : 1.0) * vals[k] * dt;
  return std::pow(outer, 1.0 / qt);
}

DecayScan l6_exterior_scan(const RadiationProfile& G, const std::vector<double>& radii,
                           const YScanOptions& opts) {
  Support supp = detect_support(G);
  if (supp.peak == 0.0) {
    return make_decay_scan(std::vector<double>(radii), std::vector<double>(radii.size(), 0.0),
                           0.0);
  }
  if (!(supp.lo > 0.0))
    throw std::invalid_argument("l6_exterior_scan: support must satisfy 0 < a < b");
  for (double R : radii)
    if (R < supp.hi)
      throw std::invalid_argument("l6_exterior_scan: radii must be >= the support edge b");

  ProfileInterpolant ev(G, false);
  const double step = opts.rho_factor * G.line().spacing();
  std::vector<double> values(radii.size());
  for (std::size_t k = 0; k < radii.size(); ++k) {
    double R = radii[k];
    double far_from = std::max(R, 4.0 * supp.hi);
    if (ev.zonal()) {
      auto TG = [&](double rho, double) {
        return 2.0 * kPi / rho * (ev.antiderivative(rho) - ev.antiderivative(-rho));
      };
      values[k] = 4.0 * kPi *
                  radial_power_integral(TG, 0.0, R, far_from,
                                        2.0 * kPi * ev.total_mass(), 6.0, step);
    } else {
      const auto& sph = G.sphere();
      std::vector<double> masses = per_direction_masses(G);
      double acc = 0.0;
      for (int j = 0; j < sph.count(); ++j) {
        GeneralWave u(ev, sph.node(j));
        double kappa = 2.0 * kPi * u.far_coefficient(masses);
        auto TG = [&](double rho, double t) { return 2.0 * kPi * u(rho, t); };
        acc += sph.weight(j) * radial_power_integral(TG, 0.0, R, far_from, kappa, 6.0,
                                                     step * 4.0);
      }
      values[k] = acc;
    }
  }
  double vmax = *std::max_element(values.begin(), values.end());
  return make_decay_scan(std::vector<double>(radii), std::move(values), 1e-14 * vmax);
}

std::vector<double> l6_lemma_ratios(const RadiationProfile& G, const DecayScan& scan) {
  Support supp = detect_support(G);
  double width = supp.hi - supp.lo;
  double g6 = std::pow(l2_norm_profile(G), 6.0);
  std::vector<double> ratios(scan.radii.size(), 0.0);
  if (g6 == 0.0) return ratios;
  for (std::size_t i = 0; i < scan.radii.size(); ++i) {
    double envelope = width * width / (scan.radii[i] * scan.radii[i]) * g6;
    ratios[i] = scan.values[i] / envelope;
  }
  return ratios;
}

DecayScan lemma_y_scan(const RadiationProfile& G, double p,
                       const std::vector<double>& radii, const YScanOptions& opts) {
  require_p_range(p, "lemma_y_scan");
  Support supp = detect_support(G);
  if (supp.peak > 0.0 &&
      (supp.lo <= G.line().point(0) || supp.hi >= G.line().point(G.line().m() - 1)))
    throw std::invalid_argument("lemma_y_scan: profile support touches the s-grid edge");
  std::vector<double> values(radii.size());
  for (std::size_t k = 0; k < radii.size(); ++k) {
    YScanOptions o = opts;
    if (o.t_max == 0.0) o.t_max = 4.0 * *std::max_element(radii.begin(), radii.end());
    values[k] = exterior_y_norm_profile(G, p, radii[k], o);
  }
  double vmax = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
  return make_decay_scan(std::vector<double>(radii), std::move(values), 1e-14 * vmax);
}

GeometricSumCheck geometric_sum_check(double gamma, double gamma1, double q,
                                      const std::vector<double>& a) {
  if (!(q > 0.0)) throw std::invalid_argument("geometric_sum_check: q must be positive");
  if (!(gamma > gamma1 && gamma1 > 1.0))
    throw std::invalid_argument("geometric_sum_check: need gamma > gamma1 > 1");
  for (double v : a)
    if (v < 0.0 || !std::isfinite(v))
      throw std::invalid_argument("geometric_sum_check: sequence must be non-negative");
  double lhs_sum = 0.0, rhs_sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    lhs_sum += std::pow(gamma, -static_cast<double>(j)) * a[j];
    rhs_sum += std::pow(gamma1, -static_cast<double>(j) * q) * std::pow(a[j], q);
  }
  double lhs = std::pow(lhs_sum, q);
  double rhs = std::pow(gamma / (gamma - gamma1), q) * rhs_sum;
  return {lhs, rhs, lhs <= rhs * (1.0 + 1e-12)};
}

RecursionDecayResult recursion_decay(const DecayScan& samples, double alpha, double l,
                                     double c, double epsilon) {
  if (!(l > 1.0) || !(alpha > 0.0) || !(c > 0.0))
    throw std::invalid_argument("recursion_decay: need l > 1, alpha > 0, c > 0");
  const auto& r = samples.radii;
  const auto& S = samples.values;
  const int n = static_cast<int>(r.size());
  if (n < 6) throw std::invalid_argument("recursion_decay: need at least 6 samples");

  RecursionDecayResult out;
  out.beta = (1.0 - 1.0 / l) * alpha - epsilon;
  if (!(out.beta > 0.0))
    throw std::invalid_argument("recursion_decay: epsilon leaves no admissible beta");

  double head = 0.0, tail = 0.0;
  for (int i = 0; i < n / 4 + 1; ++i) head = std::max(head, S[i]);
  for (int i = 3 * n / 4; i < n; ++i) tail = std::max(tail, S[i]);
  if (head == 0.0 && tail == 0.0) {
    out.certified = true;
    out.onset_radius = r.front();
    out.detail = "all samples vanish";
    return out;
  }
  if (!(tail < 0.5 * head))
    throw std::invalid_argument("recursion_decay: samples do not decay");

  // Hypothesis audit: the recursion must hold on the samples themselves.
  constexpr double kMinRatio = 4.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (r[j] < kMinRatio * r[i]) continue;
      double bound = c * (std::pow(r[i] / r[j], alpha) + std::pow(S[i], l));
      if (S[j] > bound * (1.0 + 1e-9)) {
        out.detail = "recursion hypothesis fails at r1=" + std::to_string(r[i]) +
                     ", r2=" + std::to_string(r[j]);
        return out;
      }
    }

  // Recursion-derived bound at each sample radius.
  std::vector<double> B(n, std::numeric_limits<double>::infinity());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < k; ++i) {
      if (r[k] < kMinRatio * r[i]) continue;
      B[k] = std::min(B[k], c * (std::pow(r[i] / r[k], alpha) + std::pow(S[i], l)));
    }

  // Largest suffix where both the bound and the measurements certify r^-beta.
  int onset = -1;
  for (int k = n - 1; k >= 0; --k) {
    double target = std::pow(r[k], -out.beta);
    bool ok = S[k] <= target * (1.0 + 1e-12) &&
              (std::isinf(B[k]) ? false : B[k] <= target * (1.0 + 1e-12));
    if (ok)
      onset = k;
    else
      break;
  }
  if (onset < 0 || onset > n - 3) {
    out.detail = "no suffix of samples sustains the certified decay";
    return out;
  }
  out.certified = true;
  out.onset_radius = r[onset];
  out.detail = "certified on " + std::to_string(n - onset) + " sample radii";
  return out;
}

}  // namespace radfield
