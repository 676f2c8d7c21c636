#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupopt/family.hpp"
#include "groupopt/verifier.hpp"

namespace groupopt {

/// Continuous maximizer plus the integer recommendation derived from it.
struct Optimum {
  double x_star = 0.0;
  int k_star = 0;          // objective-comparing choice of floor/ceil
  int k_star_rounded = 0;  // nearest integer, half away from zero
  double p_no_default = 0.0;
  double method_agreement = 0.0;  // max pairwise spread of the three solvers
  double a = 0.0;
  double b = 0.0;
  bool k_min_boundary = false;   // x_star below the smallest recommendable size
  bool rounding_mismatch = false;
};

/// Locates the maximizer inside the certified bracket three ways (root of the
/// stationarity function, root of h - S, golden-section maximization of the
/// log objective) and reconciles them. Throws domain_error when the
/// certificate carries no bracket or the solvers disagree beyond 1e-4.
Optimum maximize(const FamilySpec& fam, const TheoremCertificate& cert,
                 double tol = 1e-12);

/// One row of a parameter sweep.
struct SweepRecord {
  double param_value = 0.0;
  bool certified = false;
  std::optional<Optimum> optimum;  // absent when not certified
  std::optional<double> a;
  std::optional<double> b;
};

/// Certifies and maximizes at each grid value of the named parameter.
std::vector<SweepRecord> sweep(const std::string& family_name,
                               const std::string& param_name, double lo,
                               double hi, double step);

/// Result of the uniform-sign interval narrowing.
struct NarrowResult {
  double x_lo = 0.0;
  double x_hi = 0.0;
  bool found_lo = false;  // some grid x had min_p g(x, p) > 0
  bool found_hi = false;  // some grid x had max_p g(x, p) < 0
};

/// Sharpens the maximizer interval uniformly over a parameter range: x_lo is
/// the largest multiple of x_step where the stationarity function is positive
/// for every p on the grid, x_hi the smallest where it is negative for every
/// p. The maximizer lies in (x_lo, x_hi) for every parameter value in range.
NarrowResult narrow_interval(const std::string& family_name,
                             const std::string& param_name, double p_lo,
                             double p_hi, double p_step = 1e-3,
                             double x_lo_init = 2.718281828459045,
                             double x_hi_init = 7.389056098930650,
                             double x_step = 0.1);

}  // namespace groupopt
