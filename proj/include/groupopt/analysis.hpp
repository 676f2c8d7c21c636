#pragma once

#include <cstddef>

#include "groupopt/family.hpp"

namespace groupopt {

/// Per-member default probability 1/f(x). Throws domain_error when f(x) <= 1
/// (the family is inadmissible at this x) or f(x) is so close to 1 that
/// 1 - 1/f underflows relative precision.
double default_prob(const FamilySpec& fam, double x);

/// The bracket function f(x) - x f'(x). Its crossings of 1/2 and 1 delimit
/// the interval that contains the maximizer.
double bracket_fn(const FamilySpec& fam, double x);

struct SeriesResult {
  double value = 0.0;
  std::size_t terms_used = 0;
  double truncation_bound = 0.0;  // upper bound on the discarded tail
};

/// Sum of y^n / ((n+1)(n+2)) over n >= 0, truncated once the geometric tail
/// bound y^{N+1} / ((N+2)(N+3)(1-y)) drops below `tol`. Requires 0 <= y < 1.
/// Throws domain_error if the 10^6-term cap is reached before convergence.
SeriesResult stationarity_series(double y, double tol = 1e-13);

/// Closed form of the same series: ((1-y) ln(1-y) + y) / y^2, with a Taylor
/// switch near y = 0 where the closed form cancels.
double stationarity_series_closed(double y);

/// The series evaluated at y = default_prob(fam, x). Decreasing in x and
/// contained in (1/2, 1). Term-by-term summation on its fast range; very
/// close to the admissibility edge (y > 0.99) the closed form takes over,
/// where the series would need over 10^5 terms.
double stationarity_series_at(const FamilySpec& fam, double x, double tol = 1e-13);

/// Log-scale objective x ln(1 - 1/f(x)); exp of it is the group
/// no-default probability.
double log_objective(const FamilySpec& fam, double x);

/// (1 - 1/f(x))^x, the probability that no member of a group of size x
/// defaults.
double group_success_prob(const FamilySpec& fam, double x);

/// Stationarity function [1 - phi] ln(1 - phi) - x phi' with phi = 1/f.
/// Shares its sign with d/dx of log_objective; its root is the maximizer.
double stationarity(const FamilySpec& fam, double x);

/// Principal-branch Lambert W for z >= 0: returns w with w e^w = z.
double lambert_w(double z);

}  // namespace groupopt
