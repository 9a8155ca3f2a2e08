#pragma once

#include <cstdint>
#include <string_view>

namespace radfield {

// Counter-based generator: value(i) is a pure function of (seed, stream, i),
// so independent streams can be drawn in any order, from any thread, and a
// run is reproduced exactly by its seed.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::string_view stream)
      : key_(mix(seed ^ hash(stream))) {}

  // i-th variate of this stream, uniform in [0, 1).
  double uniform(std::uint64_t i) const {
    return static_cast<double>(mix(key_ ^ mix(i + 0x9e3779b97f4a7c15ull)) >> 11) *
           0x1.0p-53;
  }

  // uniform in [lo, hi)
  double uniform(std::uint64_t i, double lo, double hi) const {
    return lo + (hi - lo) * uniform(i);
  }

  // symmetric in [-a, a]
  double symmetric(std::uint64_t i, double a) const { return uniform(i, -a, a); }

  static std::uint64_t hash(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
};

}  // namespace radfield
