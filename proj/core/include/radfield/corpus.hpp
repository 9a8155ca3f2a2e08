#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "radfield/freewave.hpp"
#include "radfield/grid.hpp"
#include "radfield/sobolev.hpp"

namespace radfield {

// Shared test inputs. Everything random is drawn from a counter-based
// generator, so a corpus is a pure function of (seed, sizes).

ScalarField3 radial_field(const UniformGrid3& grid,
                          const std::function<double(double)>& f);

// Three Gaussian data pairs, all radial so the d'Alembert route can audit
// every transform: (e^{-|x|^2}, 0), (0, e^{-|x|^2}), (e^{-2|x|^2}, e^{-|x|^2}/2).
std::vector<DataPair> gaussian_pairs(const UniformGrid3& grid, double beta);

// The same three pairs on a radial grid.
std::vector<RadialPair> gaussian_radial_pairs(double dr, int count);

// Off-center pair (e^{-|x - 0.5 e1|^2}, e^{-2|x|^2}/2): exercises the
// non-zonal paths.
DataPair offset_pair(const UniformGrid3& grid, double beta);

// Zonal profile from a function of s.
RadiationProfile zonal_profile(const LineGrid& line, const SphereGrid& sphere,
                               Direction direction,
                               const std::function<double(double)>& g);

// Seeded profiles: sums of a few Gaussian bumps, some with a mild
// direction modulation. Used by the cut-off boundedness sweeps.
std::vector<RadiationProfile> profile_corpus(const LineGrid& line,
                                             const SphereGrid& sphere, int count,
                                             std::uint64_t seed);

// Seeded smooth profiles compactly supported inside (a, b).
std::vector<RadiationProfile> compact_profile_corpus(const LineGrid& line,
                                                     const SphereGrid& sphere, int count,
                                                     double a, double b,
                                                     std::uint64_t seed);

// C^infinity bump on (-1, 1): exp(-y^2 / (1 - y^2)), zero outside.
double smooth_bump(double y);

// Zonal profile: center bump of scale ~0.8 r1 plus a symmetric power tail
// |s|^{-sigma} switched on smoothly over [r1, 2 r1]. sigma is the decay of
// the tail VALUES; the cut-off norm scan of the result decays like
// r^{1/2 - sigma - beta} in H^beta.
RadiationProfile synthetic_tail_profile(const LineGrid& line, const SphereGrid& sphere,
                                        Direction direction, double sigma, double r1,
                                        double tail_amp = 0.25, double bump_amp = 1.0);

}  // namespace radfield
