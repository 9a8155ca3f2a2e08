#include "radfield/profile_eval.hpp"

#include <stdexcept>

#include "radfield/fft.hpp"

namespace radfield {

std::vector<double> cumulative_integral(const std::vector<double>& f, double h) {
  const int n = static_cast<int>(f.size());
  if (n < 4) throw std::invalid_argument("cumulative_integral: need >= 4 samples");
  std::vector<double> F(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) {
    double cell;
    if (i == 0) {
      cell = (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]) * h / 24.0;
    } else if (i + 2 < n) {
      cell = (-f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2]) * h / 24.0;
    } else {
      cell = (f[i - 2] - 5.0 * f[i - 1] + 19.0 * f[i] + 9.0 * f[i + 1]) * h / 24.0;
    }
    F[i + 1] = F[i] + cell;
  }
  return F;
}

ProfileInterpolant::ProfileInterpolant(const RadiationProfile& G, bool with_derivative)
    : G_(G), zonal_(G.is_zonal()) {
  const auto& line = G.line();
  const int nd = G.sphere().count();
  const int build = zonal_ ? 1 : nd;
  splines_.reserve(build);
  for (int j = 0; j < build; ++j)
    splines_.emplace_back(line.point(0), line.spacing(), G.row(j));
  if (zonal_) {
    std::vector<double> row(G.row(0).begin(), G.row(0).end());
    std::vector<double> cum = cumulative_integral(row, line.spacing());
    total_ = cum.back();
    cum_lo_ = line.point(0);
    cum_hi_ = line.point(line.m() - 1);
    cum_spline_ = std::make_unique<CubicSpline1D>(cum_lo_, line.spacing(), cum);
  }
  if (with_derivative && !zonal_) {
    std::vector<double> drows = line_derivative_rows(line, G.values(), nd);
    dsplines_.reserve(nd);
    const int m = line.m();
    for (int j = 0; j < nd; ++j)
      dsplines_.emplace_back(
          line.point(0), line.spacing(),
          std::span<const double>(drows.data() + static_cast<std::size_t>(j) * m,
                                  static_cast<std::size_t>(m)));
  }
}

double ProfileInterpolant::angular_value(double s, const std::array<double, 3>& omega) const {
  if (zonal_) return splines_[0](s);
  auto st = G_.sphere().stencil(omega);
  double acc = 0.0;
  for (int q = 0; q < 4; ++q)
    if (st.weight[q] != 0.0) acc += st.weight[q] * splines_[st.index[q]](s);
  return acc;
}

double ProfileInterpolant::antiderivative(double y) const {
  if (!cum_spline_) throw std::logic_error("antiderivative: profile is not zonal");
  if (y <= cum_lo_) return 0.0;
  if (y >= cum_hi_) return total_;
  return (*cum_spline_)(y);
}

}  // namespace radfield
