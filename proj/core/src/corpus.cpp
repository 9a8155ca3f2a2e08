#include "radfield/corpus.hpp"

#include <cmath>

#include "radfield/parallel.hpp"
#include "radfield/rng.hpp"

namespace radfield {

ScalarField3 radial_field(const UniformGrid3& grid,
                          const std::function<double(double)>& f) {
  ScalarField3 out(grid);
  const int n = grid.n();
  parallel_for(grid.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      int k = static_cast<int>(idx % n);
      int j = static_cast<int>((idx / n) % n);
      int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
      double x = grid.point(i), y = grid.point(j), z = grid.point(k);
      out.values[idx] = f(std::sqrt(x * x + y * y + z * z));
    }
  });
  return out;
}

std::vector<DataPair> gaussian_pairs(const UniformGrid3& grid, double beta) {
  auto g1 = [](double r) { return std::exp(-r * r); };
  auto g2 = [](double r) { return std::exp(-2.0 * r * r); };
  std::vector<DataPair> out;
  out.emplace_back(radial_field(grid, g1), ScalarField3(grid), beta);
  out.emplace_back(ScalarField3(grid), radial_field(grid, g1), beta);
  out.emplace_back(radial_field(grid, g2),
                   radial_field(grid, [&](double r) { return 0.5 * g1(r); }), beta);
  return out;
}

std::vector<RadialPair> gaussian_radial_pairs(double dr, int count) {
  std::vector<double> zero(count, 0.0), a(count), b(count), c(count);
  for (int i = 0; i < count; ++i) {
    double r = dr * i;
    a[i] = std::exp(-r * r);
    b[i] = std::exp(-2.0 * r * r);
    c[i] = 0.5 * a[i];
  }
  std::vector<RadialPair> out;
  out.emplace_back(dr, a, zero);
  out.emplace_back(dr, zero, a);
  out.emplace_back(dr, b, c);
  return out;
}

DataPair offset_pair(const UniformGrid3& grid, double beta) {
  ScalarField3 u0(grid);
  const int n = grid.n();
  parallel_for(grid.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      int k = static_cast<int>(idx % n);
      int j = static_cast<int>((idx / n) % n);
      int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
      double x = grid.point(i) - 0.5, y = grid.point(j), z = grid.point(k);
      u0.values[idx] = std::exp(-(x * x + y * y + z * z));
    }
  });
  ScalarField3 u1 =
      radial_field(grid, [](double r) { return 0.5 * std::exp(-2.0 * r * r); });
  return DataPair(std::move(u0), std::move(u1), beta);
}

RadiationProfile zonal_profile(const LineGrid& line, const SphereGrid& sphere,
                               Direction direction,
                               const std::function<double(double)>& g) {
  RadiationProfile out(line, sphere, direction);
  for (int i = 0; i < line.m(); ++i) {
    double v = g(line.point(i));
    for (int j = 0; j < sphere.count(); ++j) out.value(i, j) = v;
  }
  return out;
}

std::vector<RadiationProfile> profile_corpus(const LineGrid& line,
                                             const SphereGrid& sphere, int count,
                                             std::uint64_t seed) {
  std::vector<RadiationProfile> out;
  out.reserve(count);
  CounterRng rng(seed, "profile-corpus");
  std::uint64_t ctr = 0;
  for (int q = 0; q < count; ++q) {
    int bumps = 2 + static_cast<int>(rng.uniform(ctr++) * 3.0);
    std::vector<double> amp(bumps), center(bumps), width(bumps);
    for (int b = 0; b < bumps; ++b) {
      amp[b] = rng.symmetric(ctr++, 1.0);
      center[b] = rng.symmetric(ctr++, 3.0);
      width[b] = rng.uniform(ctr++, 0.4, 1.5);
    }
    double mod = q % 2 == 0 ? 0.0 : rng.uniform(ctr++, 0.1, 0.4);
    RadiationProfile G(line, sphere, Direction::plus);
    for (int i = 0; i < line.m(); ++i) {
      double s = line.point(i);
      double g = 0.0;
      for (int b = 0; b < bumps; ++b) {
        double y = (s - center[b]) / width[b];
        g += amp[b] * std::exp(-y * y);
      }
      for (int j = 0; j < sphere.count(); ++j)
        G.value(i, j) = g * (1.0 + mod * sphere.node(j)[2]);
    }
    out.push_back(std::move(G));
  }
  return out;
}

double smooth_bump(double y) {
  if (std::fabs(y) >= 1.0) return 0.0;
  return std::exp(-y * y / (1.0 - y * y));
}

std::vector<RadiationProfile> compact_profile_corpus(const LineGrid& line,
                                                     const SphereGrid& sphere, int count,
                                                     double a, double b,
                                                     std::uint64_t seed) {
  std::vector<RadiationProfile> out;
  out.reserve(count);
  CounterRng rng(seed, "compact-profile-corpus");
  std::uint64_t ctr = 0;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int q = 0; q < count; ++q) {
    int bumps = 1 + static_cast<int>(rng.uniform(ctr++) * 3.0);
    std::vector<double> amp(bumps), center(bumps), width(bumps);
    for (int k = 0; k < bumps; ++k) {
      amp[k] = rng.uniform(ctr++, 0.3, 1.0) * (rng.uniform(ctr++) < 0.3 ? -1.0 : 1.0);
      width[k] = rng.uniform(ctr++, 0.25, 0.9) * half;
      center[k] = mid + rng.symmetric(ctr++, half - width[k]);
    }
    out.push_back(zonal_profile(line, sphere, Direction::plus, [&](double s) {
      double g = 0.0;
      for (int k = 0; k < bumps; ++k) g += amp[k] * smooth_bump((s - center[k]) / width[k]);
      return g;
    }));
  }
  return out;
}

RadiationProfile synthetic_tail_profile(const LineGrid& line, const SphereGrid& sphere,
                                        Direction direction, double sigma, double r1,
                                        double tail_amp, double bump_amp) {
  auto ramp = [](double y) {
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return 1.0;
    return y * y * (3.0 - 2.0 * y);
  };
  return zonal_profile(line, sphere, direction, [&](double s) {
    double g = bump_amp * smooth_bump(s / (0.8 * r1));
    double as = std::fabs(s);
    if (as > r1)
      g += tail_amp * std::pow(as / r1, -sigma) * ramp((as - r1) / r1);
    return g;
  });
}

}  // namespace radfield
