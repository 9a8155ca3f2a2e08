#include "radfield/radiation.hpp"

#include <cmath>
#include <complex>
#include <memory>
#include <stdexcept>
#include <vector>

#include "radfield/fft.hpp"
#include "radfield/freewave.hpp"
#include "radfield/interp.hpp"
#include "radfield/parallel.hpp"
#include "radfield/profile_eval.hpp"

namespace radfield {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;
const std::complex<double> kEPlusTau(0.0, 1.0);    // e^{+i tau}, tau = pi/2
const std::complex<double> kEMinusTau(0.0, -1.0);  // e^{-i tau}

void require_compact_support(const RadiationProfile& G, const char* who) {
  const int m = G.line().m();
  double gmax = 0.0;
  for (double v : G.values()) gmax = std::max(gmax, std::fabs(v));
  if (gmax == 0.0) return;
  double edge = 0.0;
  for (int j = 0; j < G.sphere().count(); ++j) {
    edge = std::max(edge, std::fabs(G.value(0, j)));
    edge = std::max(edge, std::fabs(G.value(m - 1, j)));
  }
  if (edge > 1e-8 * gmax)
    throw std::invalid_argument(std::string(who) +
                                ": profile support touches the s-grid boundary");
}

// Sum over the sphere of g(x.w + shift, w) (value or s-derivative), times
// `scale`. The zonal branch uses the exact slice reduction
// int_{S^2} g(x.w + t) dw = (2pi/|x|) [Gcum(|x|+t) - Gcum(-|x|+t)].
ScalarField3 radon_sum(const ProfileInterpolant& ev, const UniformGrid3& grid, double shift,
                       double scale, bool derivative) {
  const auto& G = ev.profile();
  const auto& sph = G.sphere();
  const int n = grid.n();
  ScalarField3 out(grid);
  if (ev.zonal()) {
    parallel_for(grid.size(), [&](std::size_t lo, std::size_t hi) {
      for (std::size_t idx = lo; idx < hi; ++idx) {
        int k = static_cast<int>(idx % n);
        int j = static_cast<int>((idx / n) % n);
        int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
        double x = grid.point(i), y = grid.point(j), z = grid.point(k);
        double rho = std::sqrt(x * x + y * y + z * z);
        double val;
        if (rho < 1e-12) {
          val = derivative ? 4.0 * kPi * ev.deriv(shift, 0)
                           : 4.0 * kPi * ev.value(shift, 0);
        } else if (derivative) {
          val = 2.0 * kPi / rho * (ev.value(rho + shift, 0) - ev.value(-rho + shift, 0));
        } else {
          val = 2.0 * kPi / rho *
                (ev.antiderivative(rho + shift) - ev.antiderivative(-rho + shift));
        }
        out.values[idx] = scale * val;
      }
    });
    return out;
  }
  const int nd = sph.count();
  parallel_for(grid.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      int k = static_cast<int>(idx % n);
      int j = static_cast<int>((idx / n) % n);
      int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
      double x = grid.point(i), y = grid.point(j), z = grid.point(k);
      double acc = 0.0;
      for (int d = 0; d < nd; ++d) {
        const auto& w = sph.node(d);
        double s = x * w[0] + y * w[1] + z * w[2] + shift;
        acc += sph.weight(d) * (derivative ? ev.deriv(s, d) : ev.value(s, d));
      }
      out.values[idx] = scale * acc;
    }
  });
  return out;
}

}  // namespace

RadiationProfile forward(const DataPair& p, const SphereGrid& sphere,
                         const LineGrid& line, Direction direction, Diagnostics* diag) {
  const UniformGrid3& grid = p.u0.grid;
  if (line.nyquist() < grid.nyquist() - 1e-12)
    throw std::invalid_argument(
        "forward: line grid under-resolves the data; required nu_max >= " +
        std::to_string(grid.nyquist()) + ", got " + std::to_string(line.nyquist()));
  check_boundary_decay(p.u0, diag);
  check_boundary_decay(p.u1, diag);

  SpectralField3 U0 = dft3(p.u0);
  SpectralField3 U1 = dft3(p.u1);

  const int m = line.m();
  const int nd = sphere.count();
  const double c3 = TransformParams::c_d;
  std::vector<std::complex<double>> rows(static_cast<std::size_t>(m) * nd);

  parallel_for(nd, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t j = lo; j < hi; ++j) {
      const auto& w = sphere.node(static_cast<int>(j));
      std::complex<double>* row = rows.data() + j * m;
      for (int l = 0; l < m; ++l) {
        double nu = line.freq(l);
        if (nu == 0.0) {
          row[l] = 0.0;
          continue;
        }
        std::array<double, 3> xi = {nu * w[0], nu * w[1], nu * w[2]};
        std::complex<double> z0 = interp3(U0, xi);
        std::complex<double> z1 = interp3(U1, xi);
        std::complex<double> phase = nu < 0.0 ? kEPlusTau : kEMinusTau;
        std::complex<double> inner =
            std::complex<double>(0.0, nu) * z0 + (direction == Direction::plus ? z1 : -z1);
        double sign = direction == Direction::plus ? -1.0 : 1.0;
        row[l] = sign * c3 * std::fabs(nu) * phase * inner;
      }
    }
  });

  line_idft_rows(line, rows.data(), nd);

  RadiationProfile out(line, sphere, direction);
  double re2 = 0.0, im2 = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.values()[i] = rows[i].real();
    re2 += rows[i].real() * rows[i].real();
    im2 += rows[i].imag() * rows[i].imag();
  }
  double ratio = re2 > 0.0 ? std::sqrt(im2 / re2) : std::sqrt(im2);
  metric_into(diag, "forward_imag_ratio", ratio);
  if (ratio > 1e-6)
    warn_into(diag, "forward: imaginary residue " + std::to_string(ratio) +
                        " exceeds 1e-6 of the real norm");
  return out;
}

DataPair inverse_fourier(const RadiationProfile& G, const UniformGrid3& grid,
                         double beta, Diagnostics* diag) {
  const auto& sph = G.sphere();
  const auto& line = G.line();
  if (!sph.antipodally_closed())
    throw std::invalid_argument(
        "inverse_fourier: sphere grid is not closed under w -> -w (n_phi must be even)");

  const int m = line.m();
  const int nd = sph.count();
  std::vector<std::complex<double>> rows(G.values().begin(), G.values().end());
  line_dft_rows(line, rows.data(), nd);

  const double c3 = TransformParams::c_d;
  const bool plus = G.direction() == Direction::plus;
  SpectralField3 A0(grid), A1(grid);
  std::vector<double> W(grid.size(), 0.0);
  const int n = grid.n();
  const int half = n / 2;
  const double dxi = grid.freq_spacing();

  auto deposit = [&](const std::array<double, 3>& xi, std::complex<double> v0,
                     std::complex<double> v1) {
    double f[3];
    int c[3];
    double t[3];
    for (int a = 0; a < 3; ++a) {
      f[a] = xi[a] / dxi;
      c[a] = static_cast<int>(std::floor(f[a]));
      t[a] = f[a] - c[a];
    }
    for (int bx = 0; bx < 2; ++bx)
      for (int by = 0; by < 2; ++by)
        for (int bz = 0; bz < 2; ++bz) {
          int sx = c[0] + bx, sy = c[1] + by, sz = c[2] + bz;
          if (sx < -half || sx >= half || sy < -half || sy >= half || sz < -half ||
              sz >= half)
            continue;
          double wgt = (bx ? t[0] : 1.0 - t[0]) * (by ? t[1] : 1.0 - t[1]) *
                       (bz ? t[2] : 1.0 - t[2]);
          if (wgt == 0.0) continue;
          std::size_t idx = grid.index(sx < 0 ? sx + n : sx, sy < 0 ? sy + n : sy,
                                       sz < 0 ? sz + n : sz);
          A0.coeffs[idx] += wgt * v0;
          A1.coeffs[idx] += wgt * v1;
          W[idx] += wgt;
        }
  };

  // nu > 0 parametrizes each xi = nu w once; the (-nu, -w) samples enter
  // through the antipodal row.
  for (int l = 1; l < m / 2; ++l) {
    double nu = line.freq(l);
    int ln = m - l;
    for (int j = 0; j < nd; ++j) {
      int aj = sph.antipode(j);
      std::complex<double> Fp = rows[static_cast<std::size_t>(j) * m + l];
      std::complex<double> Fm = rows[static_cast<std::size_t>(aj) * m + ln];
      std::complex<double> diff = kEPlusTau * Fp - kEMinusTau * Fm;
      std::complex<double> sum = kEPlusTau * Fp + kEMinusTau * Fm;
      std::complex<double> u0v = (plus ? std::complex<double>(0.0, 1.0)
                                       : std::complex<double>(0.0, -1.0)) /
                                 (2.0 * c3) / (nu * nu) * diff;
      std::complex<double> u1v = -1.0 / (2.0 * c3) / nu * sum;
      const auto& w = sph.node(j);
      deposit({nu * w[0], nu * w[1], nu * w[2]}, u0v, u1v);
    }
  }

  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    if (W[idx] > 1e-12) {
      A0.coeffs[idx] /= W[idx];
      A1.coeffs[idx] /= W[idx];
    } else {
      A0.coeffs[idx] = 0.0;
      A1.coeffs[idx] = 0.0;
    }
  }

  return DataPair(idft3(A0, diag), idft3(A1, diag), beta);
}

DataPair inverse_radon3(const RadiationProfile& G, const UniformGrid3& grid,
                        double beta) {
  if (G.direction() != Direction::minus)
    throw std::invalid_argument(
        "inverse_radon3: profile must be tagged minus (use reflect() on a plus profile)");
  require_compact_support(G, "inverse_radon3");
  ProfileInterpolant ev(G, /*with_derivative=*/true);
  ScalarField3 u0 = radon_sum(ev, grid, 0.0, 1.0 / (2.0 * kPi), false);
  ScalarField3 u1 = radon_sum(ev, grid, 0.0, 1.0 / (2.0 * kPi), true);
  return DataPair(std::move(u0), std::move(u1), beta);
}

ScalarField3 synthesize(const RadiationProfile& G, double t, const UniformGrid3& grid) {
  if (G.direction() != Direction::minus)
    throw std::invalid_argument("synthesize: profile must be tagged minus");
  require_compact_support(G, "synthesize");
  ProfileInterpolant ev(G, false);
  return radon_sum(ev, grid, t, 1.0 / (2.0 * kPi), false);
}

ScalarField3 adjoint_radon(const RadiationProfile& G, const UniformGrid3& grid) {
  require_compact_support(G, "adjoint_radon");
  ProfileInterpolant ev(G, false);
  return radon_sum(ev, grid, 0.0, 1.0, false);
}

RadiationProfile reflect(const RadiationProfile& G) {
  const int m = G.line().m();
  const int nd = G.sphere().count();
  RadiationProfile out(G.line(), G.sphere(),
                       G.direction() == Direction::plus ? Direction::minus
                                                        : Direction::plus);
  for (int j = 0; j < nd; ++j) {
    int aj = G.sphere().antipode(j);
    for (int i = 1; i < m; ++i) out.value(i, j) = -G.value(m - i, aj);
    out.value(0, j) = 0.0;  // -s_0 = +s_max falls outside the grid
  }
  return out;
}

std::array<ScalarField3, 4> ansatz_embed(const RadiationProfile& G, double t,
                                         const UniformGrid3& grid) {
  if (t < 0.0) throw std::invalid_argument("ansatz_embed: t must be >= 0");
  ProfileInterpolant ev(G, false);
  const auto& sph = G.sphere();
  const int n = grid.n();
  std::array<ScalarField3, 4> out{ScalarField3(grid), ScalarField3(grid),
                                  ScalarField3(grid), ScalarField3(grid)};
  parallel_for(grid.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      int k = static_cast<int>(idx % n);
      int j = static_cast<int>((idx / n) % n);
      int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
      double x = grid.point(i), y = grid.point(j), z = grid.point(k);
      double rho = std::sqrt(x * x + y * y + z * z);
      if (rho < 1e-12) continue;
      double g;
      if (ev.zonal()) {
        g = ev.value(rho - t, 0);
      } else {
        auto st = sph.stencil({x / rho, y / rho, z / rho});
        g = 0.0;
        for (int q = 0; q < 4; ++q)
          if (st.weight[q] != 0.0) g += st.weight[q] * ev.value(rho - t, st.index[q]);
      }
      double a = g / rho;
      out[0].values[idx] = a;
      out[1].values[idx] = -a * x / rho;
      out[2].values[idx] = -a * y / rho;
      out[3].values[idx] = -a * z / rho;
    }
  });
  return out;
}

double ansatz_convergence_error(const DataPair& p, const RadiationProfile& Gplus,
                                double t, double beta, double support_radius,
                                Diagnostics* diag) {
  DataPair state = evolve(p, t, support_radius, diag);
  const UniformGrid3& grid = state.u0.grid;
  const int n = grid.n();
  SpectralField3 U = dft3(state.u0);

  std::array<ScalarField3, 4> ansatz = ansatz_embed(Gplus, t, grid);

  double total = 0.0;
  {
    ScalarField3 diff = state.u1;
    for (std::size_t i = 0; i < diff.values.size(); ++i)
      diff.values[i] -= ansatz[0].values[i];
    double e = hdot_norm_r3(diff, beta - 1.0);
    total += e * e;
  }
  for (int axis = 0; axis < 3; ++axis) {
    SpectralField3 D(grid);
    parallel_for(grid.size(), [&](std::size_t lo, std::size_t hi) {
      for (std::size_t idx = lo; idx < hi; ++idx) {
        int k = static_cast<int>(idx % n);
        int j = static_cast<int>((idx / n) % n);
        int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
        double xi = axis == 0 ? grid.freq(i) : axis == 1 ? grid.freq(j) : grid.freq(k);
        // d/dx_k brings down -i xi_k under the e^{-i xi.x} inverse
        D.coeffs[idx] = std::complex<double>(0.0, -xi) * U.coeffs[idx];
      }
    });
    ScalarField3 diff = idft3(D);
    for (std::size_t i = 0; i < diff.values.size(); ++i)
      diff.values[i] -= ansatz[axis + 1].values[i];
    double e = hdot_norm_r3(diff, beta - 1.0);
    total += e * e;
  }
  return std::sqrt(total);
}

RadiationProfile ansatz_adjoint(const ScalarField3& f, double t, int k,
                                const LineGrid& line, const SphereGrid& sphere) {
  if (t < 0.0) throw std::invalid_argument("ansatz_adjoint: t must be >= 0");
  if (k < 0 || k > 3) throw std::invalid_argument("ansatz_adjoint: k must be 0..3");
  RadiationProfile out(line, sphere, Direction::plus);
  const int m = line.m();
  parallel_for(sphere.count(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t j = lo; j < hi; ++j) {
      const auto& w = sphere.node(static_cast<int>(j));
      double wk = k == 0 ? 1.0 : w[k - 1];
      for (int i = 0; i < m; ++i) {
        double s = line.point(i);
        if (s <= -t) continue;
        double rho = s + t;
        out.value(i, static_cast<int>(j)) =
            rho * interp3_real(f, {rho * w[0], rho * w[1], rho * w[2]}) * wk;
      }
    }
  });
  return out;
}

}  // namespace radfield
