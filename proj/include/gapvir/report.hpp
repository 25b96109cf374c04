#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gapvir {

/// One failed check: which rule broke and at which generator indices.
struct Violation {
  std::string kind;
  std::vector<long> where;
  std::string detail;
};

/// Outcome of an exhaustive window sweep. Empty violation list means pass.
struct Report {
  long checks = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

}  // namespace gapvir
