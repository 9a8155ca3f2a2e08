#pragma once

#include <map>
#include <string>
#include <vector>

namespace radfield {

// Collects non-fatal findings from an operation: warnings (precondition
// violations that degrade accuracy but do not invalidate the call) and
// named numeric metrics (e.g. the imaginary residue of a transform).
struct Diagnostics {
  std::vector<std::string> warnings;
  std::map<std::string, double> metrics;

  void warn(std::string msg) { warnings.push_back(std::move(msg)); }
  void metric(const std::string& key, double value) { metrics[key] = value; }
  bool has_warnings() const { return !warnings.empty(); }
};

inline void warn_into(Diagnostics* diag, std::string msg) {
  if (diag) diag->warn(std::move(msg));
}

inline void metric_into(Diagnostics* diag, const std::string& key, double value) {
  if (diag) diag->metric(key, value);
}

}  // namespace radfield
