#pragma once

#include <map>
#include <string>

#include "radfield/exterior.hpp"
#include "radfield/grid.hpp"
#include "radfield/sobolev.hpp"

namespace radfield {

// Binary field format (.fld3), little-endian:
//   8-byte magic "RADFFLD3", u32 version, u32 flags (reserved),
//   u32 n, f64 half_width, n^3 f64 values (row-major axis order).
void write_field(const std::string& path, const ScalarField3& f);
ScalarField3 read_field(const std::string& path);

// Profile format (.prof), little-endian:
//   8-byte magic "RADFPROF", u32 version, u32 flags (bit 0: minus direction),
//   u32 m, f64 s_max, u32 n_theta, u32 n_phi,
//   node table (x, y, z, weight as f64 per node),
//   m x (n_theta * n_phi) f64 values, direction-major rows.
void write_profile(const std::string& path, const RadiationProfile& G);
RadiationProfile read_profile(const std::string& path);

// Scan CSV: '#'-prefixed header comments carrying the fit, then r,value rows.
void write_scan_csv(const std::string& path, const DecayScan& scan,
                    const std::map<std::string, std::string>& comments = {});

}  // namespace radfield
