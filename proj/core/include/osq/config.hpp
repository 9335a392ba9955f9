#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "osq/grid.hpp"
#include "osq/spectral_measure.hpp"

namespace osq {

struct SuiteConfig {
  std::string suite = "all";
  std::vector<Atom> atoms{{1.0, 1.0}};
  double half_width = 256.0;
  std::size_t n = 1 << 14;
  std::uint64_t seed = 42;
  int jobs = 0;  // 0 = hardware concurrency
  std::map<std::string, double> tolerance_overrides;

  Grid grid() const { return Grid::uniform(half_width, n); }
  SpectralMeasure rho() const { return SpectralMeasure::from_atoms(atoms); }
  double tol(const std::string& check_id, double fallback) const {
    auto it = tolerance_overrides.find(check_id);
    return it == tolerance_overrides.end() ? fallback : it->second;
  }
};

// Parses the JSON config; an empty or absent file yields all defaults.
// Violations (n not a power of two, nonpositive widths/weights) throw with
// a field diagnostic.
SuiteConfig load_config(const std::string& path);
SuiteConfig parse_config(const std::string& text);

}  // namespace osq
