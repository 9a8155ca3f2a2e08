#include "radfield/io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace radfield {

namespace {

static_assert(std::endian::native == std::endian::little,
              "field/profile formats are little-endian");

constexpr char kFieldMagic[8] = {'R', 'A', 'D', 'F', 'F', 'L', 'D', '3'};
constexpr char kProfileMagic[8] = {'R', 'A', 'D', 'F', 'P', 'R', 'O', 'F'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
void put_f64(std::ostream& os, double v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
std::uint32_t get_u32(std::istream& is) {
  std::uint32_t v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}
double get_f64(std::istream& is) {
  double v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

void check(bool ok, const std::string& msg) {
  if (!ok) throw std::runtime_error(msg);
}

}  // namespace

void write_field(const std::string& path, const ScalarField3& f) {
  std::ofstream os(path, std::ios::binary);
  check(os.good(), "write_field: cannot open " + path);
  os.write(kFieldMagic, 8);
  put_u32(os, kVersion);
  put_u32(os, 0);
  put_u32(os, static_cast<std::uint32_t>(f.grid.n()));
  put_f64(os, f.grid.half_width());
  os.write(reinterpret_cast<const char*>(f.values.data()),
           static_cast<std::streamsize>(f.values.size() * sizeof(double)));
  check(os.good(), "write_field: short write to " + path);
}

ScalarField3 read_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  check(is.good(), "read_field: cannot open " + path);
  char magic[8];
  is.read(magic, 8);
  check(is.good() && std::memcmp(magic, kFieldMagic, 8) == 0,
        "read_field: bad magic in " + path);
  check(get_u32(is) == kVersion, "read_field: unsupported version in " + path);
  get_u32(is);  // flags
  std::uint32_t n = get_u32(is);
  double L = get_f64(is);
  check(is.good(), "read_field: truncated header in " + path);
  UniformGrid3 grid(static_cast<int>(n), L);
  std::vector<double> values(grid.size());
  is.read(reinterpret_cast<char*>(values.data()),
          static_cast<std::streamsize>(values.size() * sizeof(double)));
  check(is.good(), "read_field: truncated values in " + path);
  return ScalarField3(grid, std::move(values));
}

void write_profile(const std::string& path, const RadiationProfile& G) {
  std::ofstream os(path, std::ios::binary);
  check(os.good(), "write_profile: cannot open " + path);
  os.write(kProfileMagic, 8);
  put_u32(os, kVersion);
  put_u32(os, G.direction() == Direction::minus ? 1u : 0u);
  put_u32(os, static_cast<std::uint32_t>(G.line().m()));
  put_f64(os, G.line().s_max());
  put_u32(os, static_cast<std::uint32_t>(G.sphere().n_theta()));
  put_u32(os, static_cast<std::uint32_t>(G.sphere().n_phi()));
  for (int j = 0; j < G.sphere().count(); ++j) {
    const auto& w = G.sphere().node(j);
    put_f64(os, w[0]);
    put_f64(os, w[1]);
    put_f64(os, w[2]);
    put_f64(os, G.sphere().weight(j));
  }
  os.write(reinterpret_cast<const char*>(G.values().data()),
           static_cast<std::streamsize>(G.values().size() * sizeof(double)));
  check(os.good(), "write_profile: short write to " + path);
}

RadiationProfile read_profile(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  check(is.good(), "read_profile: cannot open " + path);
  char magic[8];
  is.read(magic, 8);
  check(is.good() && std::memcmp(magic, kProfileMagic, 8) == 0,
        "read_profile: bad magic in " + path);
  check(get_u32(is) == kVersion, "read_profile: unsupported version in " + path);
  std::uint32_t flags = get_u32(is);
  std::uint32_t m = get_u32(is);
  double s_max = get_f64(is);
  std::uint32_t n_theta = get_u32(is);
  std::uint32_t n_phi = get_u32(is);
  check(is.good(), "read_profile: truncated header in " + path);
  LineGrid line(static_cast<int>(m), s_max);
  SphereGrid sphere(static_cast<int>(n_theta), static_cast<int>(n_phi));
  for (int j = 0; j < sphere.count(); ++j) {
    double x = get_f64(is), y = get_f64(is), z = get_f64(is), w = get_f64(is);
    const auto& node = sphere.node(j);
    check(std::fabs(x - node[0]) + std::fabs(y - node[1]) + std::fabs(z - node[2]) < 1e-9 &&
              std::fabs(w - sphere.weight(j)) < 1e-9,
          "read_profile: node table does not match the quadrature in " + path);
  }
  std::vector<double> values(static_cast<std::size_t>(m) * sphere.count());
  is.read(reinterpret_cast<char*>(values.data()),
          static_cast<std::streamsize>(values.size() * sizeof(double)));
  check(is.good(), "read_profile: truncated values in " + path);
  return RadiationProfile(line, sphere,
                          (flags & 1u) ? Direction::minus : Direction::plus,
                          std::move(values));
}

void write_scan_csv(const std::string& path, const DecayScan& scan,
                    const std::map<std::string, std::string>& comments) {
  std::ofstream os(path);
  check(os.good(), "write_scan_csv: cannot open " + path);
  char buf[512];
  for (const auto& [key, value] : comments) os << "# " << key << ": " << value << "\n";
  if (scan.fit.fitted) {
    std::snprintf(buf, sizeof buf,
                  "# fit: exponent=%.17g intercept=%.17g residual=%.17g points=%d "
                  "(weighted log-log LSQ, two largest radii x2)",
                  scan.fit.exponent, scan.fit.intercept, scan.fit.residual,
                  scan.fit.points_used);
    os << buf << "\n";
  } else {
    os << "# fit: none (fewer than 4 usable points)\n";
  }
  std::snprintf(buf, sizeof buf, "# floor: %.17g", scan.floor);
  os << buf << "\n";
  os << "r,value,below_floor\n";
  for (std::size_t i = 0; i < scan.radii.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d", scan.radii[i], scan.values[i],
                  scan.below_floor[i] ? 1 : 0);
    os << buf << "\n";
  }
  check(os.good(), "write_scan_csv: short write to " + path);
}

}  // namespace radfield
