#pragma once

#include <string>
#include <vector>

namespace contpath::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  // Shrinks the heaviest sweeps for a fast smoke pass; the full ranges run
  // when false.
  bool quick = false;
};

// Runs the full verification suite (closed-form/series agreement, spot-value
// oracle, route equivalence, PDE identity, Todd/KP recovery, word-count
// oracle, discrete recovery, measure-ratio law, Bernoulli coefficients), in
// that order.  Each check is independently timed; exceptions are converted
// into failures.
std::vector<CheckResult> run_all(const Options& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace contpath::verify
