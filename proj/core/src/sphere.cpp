#include "radfield/sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radfield {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n from the standard asymptotic first guess.
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) < 1e-15) break;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

SphereGrid::SphereGrid(int n_theta, int n_phi) : n_theta_(n_theta), n_phi_(n_phi) {
  if (n_theta < 4) throw std::invalid_argument("SphereGrid: n_theta must be >= 4");
  if (n_phi < 8) throw std::invalid_argument("SphereGrid: n_phi must be >= 8");
  gauss_legendre(n_theta, mu_, mu_weight_);
  phi_.resize(n_phi);
  for (int k = 0; k < n_phi; ++k) phi_[k] = 2.0 * kPi * k / n_phi;

  nodes_.resize(count());
  weights_.resize(count());
  const double wphi = 2.0 * kPi / n_phi;
  for (int it = 0; it < n_theta; ++it) {
    double mu = mu_[it];
    double sin_theta = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    for (int ip = 0; ip < n_phi; ++ip) {
      int j = it * n_phi + ip;
      nodes_[j] = {sin_theta * std::cos(phi_[ip]), sin_theta * std::sin(phi_[ip]), mu};
      weights_[j] = mu_weight_[it] * wphi;
    }
  }

  // -omega maps (mu, phi) -> (-mu, phi + pi); exact when n_phi is even
  // because the Gauss-Legendre nodes are symmetric about mu = 0.
  antipode_.resize(count());
  antipodally_closed_ = (n_phi % 2 == 0);
  for (int it = 0; it < n_theta; ++it) {
    int at = n_theta - 1 - it;
    for (int ip = 0; ip < n_phi; ++ip) {
      int ap = (ip + n_phi / 2) % n_phi;
      antipode_[it * n_phi + ip] = at * n_phi + ap;
    }
  }
  if (antipodally_closed_) {
    for (int j = 0; j < count(); ++j) {
      const auto& a = nodes_[j];
      const auto& b = nodes_[antipode_[j]];
      double err = std::fabs(a[0] + b[0]) + std::fabs(a[1] + b[1]) + std::fabs(a[2] + b[2]);
      if (err > 1e-12) {
        antipodally_closed_ = false;
        break;
      }
    }
  }
}

SphereGrid::Stencil SphereGrid::stencil(const std::array<double, 3>& omega) const {
  double mu = omega[2];
  double phi = std::atan2(omega[1], omega[0]);
  if (phi < 0.0) phi += 2.0 * kPi;

  const double dphi = 2.0 * kPi / n_phi_;
  double fp = phi / dphi;
  int ip0 = static_cast<int>(fp) % n_phi_;
  double tp = fp - std::floor(fp);
  int ip1 = (ip0 + 1) % n_phi_;

  int it0, it1;
  double tt;
  if (mu <= mu_.front()) {
    it0 = it1 = 0;
    tt = 0.0;
  } else if (mu >= mu_.back()) {
    it0 = it1 = n_theta_ - 1;
    tt = 0.0;
  } else {
    it0 = 0;
    while (it0 + 1 < n_theta_ && mu_[it0 + 1] < mu) ++it0;
    it1 = it0 + 1;
    tt = (mu - mu_[it0]) / (mu_[it1] - mu_[it0]);
  }

  Stencil st;
  st.index = {it0 * n_phi_ + ip0, it0 * n_phi_ + ip1, it1 * n_phi_ + ip0,
              it1 * n_phi_ + ip1};
  st.weight = {(1.0 - tt) * (1.0 - tp), (1.0 - tt) * tp, tt * (1.0 - tp), tt * tp};
  return st;
}

}  // namespace radfield
