#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gsr {

/// Outcome of one invariant check. `measured` is the worst deviation seen
/// (or the quantity compared against `tolerance`).
struct PropertyResult {
  std::string name;
  bool passed;
  double measured;
  double tolerance;
  std::string detail;
};

/// Names accepted by run_property, in suite order.
std::vector<std::string> property_names();

/// Runs one invariant at its module-declared scale. Unexpected exceptions
/// are reported as a failed result, not rethrown.
PropertyResult run_property(const std::string& name, std::uint64_t seed);

}  // namespace gsr
