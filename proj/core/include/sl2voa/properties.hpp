#pragma once

// Randomized and exhaustive consistency checks of the engines, exact throughout.

#include <cstddef>
#include <string>
#include <vector>

namespace sl2voa {

struct PropertyResult {
  std::string name;
  int k = 0;
  bool passed = false;
  std::size_t samples = 0;
  std::string detail;  // first counterexample, or a summary
  double runtime_ms = 0;
};

struct PropertyOptions {
  unsigned seed = 20240601;
  std::size_t samples = 30;
  std::size_t route_samples = 50;
  int route_degree_cap = 9;
};

std::vector<std::string> property_names();
// Throws UnknownName for an unknown property.
PropertyResult run_property(const std::string& name, int k, const PropertyOptions& opts = {});
std::vector<PropertyResult> run_properties(int k, const PropertyOptions& opts = {});

}  // namespace sl2voa
