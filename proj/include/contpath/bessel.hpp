#pragma once

#include "contpath/eval_result.hpp"

namespace contpath::bessel {

inline constexpr int kMaxBesselTerms = 10000;

// Modified Bessel function of the first kind, integer order nu >= 0, via the
// ascending series sum_m (z/2)^(2m+nu) / (m! (m+nu)!).  Stops when the next
// term is below tol relative to the running sum and the term ratio is < 1;
// tail_bound is the geometric majorant of the dropped tail.  Throws
// ResourceLimitError if max_terms iterations do not reach the tolerance.
EvalResult bessel_i(int nu, double z, double tol = 1e-16,
                    int max_terms = kMaxBesselTerms);

}  // namespace contpath::bessel
