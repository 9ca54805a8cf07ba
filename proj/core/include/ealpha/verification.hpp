#pragma once

#include <string>
#include <vector>

namespace ealpha {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

/// Fast invariant checks (transforms, multipliers, the velocity/vorticity
/// form equivalence, conservation rates, single-mode decay). Each takes
/// well under a second at the built-in resolution.
std::vector<CheckResult> run_invariant_checks(unsigned seed = 7);

}  // namespace ealpha
