#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace reciproca {

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;  // worst observed value of the check's metric
  std::string note;       // tolerance or expectation, human readable
};

// Runs every library-level property check with seeded random draws where
// randomness is called for. Checks assert computed behavior (exact closure
// counts, recomputed bracket tables, oracle comparisons), so a healthy build
// passes all of them. `cases` scales the number of random draws per check.
std::vector<CheckResult> verify_all(std::uint64_t seed, int cases);

}  // namespace reciproca
