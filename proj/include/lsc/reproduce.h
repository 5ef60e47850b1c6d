// The full verification suite behind `lsc reproduce-paper` and the
// acceptance test binary: rigidity and completeness grids over Q, the
// char-p H^2 dimension pattern with generator matching, weight
// localization, the restrictedness boundary scan, the solvable-algebra
// factorization identity, randomized property suites, and structural
// invariants. Each check prints one PASS/FAIL line as it completes.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lsc {

struct AcceptanceOptions {
  std::vector<std::uint32_t> primes{3, 5};  // char-p pattern primes
  bool long_run = false;                    // additionally run p = 7 and p = 11
  std::uint32_t max_n = 6;                  // n cap for the characteristic-0 grids
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opts,
                                        std::ostream& progress);

}  // namespace lsc
