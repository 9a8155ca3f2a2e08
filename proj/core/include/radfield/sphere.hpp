#pragma once

#include <array>
#include <vector>

namespace radfield {

// Gauss-Legendre nodes and weights on [-1, 1]; exact for degree <= 2n-1.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Product quadrature on S^2: Gauss-Legendre in cos(theta) x uniform azimuth.
// Node order: j = i_theta * n_phi + i_phi, with cos(theta) ascending.
class SphereGrid {
 public:
  SphereGrid(int n_theta, int n_phi);

  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }
  int count() const { return n_theta_ * n_phi_; }

  const std::array<double, 3>& node(int j) const { return nodes_[j]; }
  double weight(int j) const { return weights_[j]; }
  double mu(int i_theta) const { return mu_[i_theta]; }
  double phi(int i_phi) const { return phi_[i_phi]; }

  // Index of the node closest to -node(j); exact when n_phi is even.
  int antipode(int j) const { return antipode_[j]; }
  bool antipodally_closed() const { return antipodally_closed_; }

  // Bilinear weights (in cos(theta) and periodic phi) for sampling a
  // node-indexed table at an arbitrary unit direction. Rings beyond the
  // polar-most nodes extrapolate as constants.
  struct Stencil {
    std::array<int, 4> index;
    std::array<double, 4> weight;
  };
  Stencil stencil(const std::array<double, 3>& omega) const;

 private:
  int n_theta_;
  int n_phi_;
  std::vector<double> mu_;        // cos(theta), ascending
  std::vector<double> mu_weight_;
  std::vector<double> phi_;
  std::vector<std::array<double, 3>> nodes_;
  std::vector<double> weights_;
  std::vector<int> antipode_;
  bool antipodally_closed_;
};

inline SphereGrid sphere_quadrature(int n_theta, int n_phi) {
  return SphereGrid(n_theta, n_phi);
}

}  // namespace radfield
