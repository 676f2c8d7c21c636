#pragma once

#include <functional>

namespace groupopt {

using ScalarFn = std::function<double(double)>;

/// Locates a zero of `fn` inside [lo, hi], which must bracket a sign change.
/// Bisection with safeguarded secant acceleration; the iterate never leaves
/// the bracket. Returns the midpoint once the bracket width is <= xtol.
/// Throws domain_error if fn(lo) and fn(hi) share a sign, or after 200
/// iterations.
double find_root_bracketed(const ScalarFn& fn, double lo, double hi,
                           double xtol = 1e-12);

/// Golden-section maximization of a unimodal function on [lo, hi], followed
/// by a least-squares quadratic polish that recovers the digits golden
/// section loses to objective round-off near the peak.
double golden_section_max(const ScalarFn& fn, double lo, double hi,
                          double rel_tol = 1e-10, int max_iter = 200);

}  // namespace groupopt
