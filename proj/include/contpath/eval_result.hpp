#pragma once

#include <string>

namespace contpath {

// A floating-point evaluation together with a truncation-error indicator.
struct EvalResult {
  double value = 0.0;
  double tail_bound = 0.0;
  int terms_used = 0;
  // Empty on a normal result; set when the value is degenerate by convention
  // (for example a series cap below the dimension).
  std::string flag;
};

}  // namespace contpath
