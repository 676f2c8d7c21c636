#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupopt/family.hpp"
#include "groupopt/solvers.hpp"

namespace groupopt {

/// Scan parameters for condition checks and bracket location. The grid is
/// dense with spacing `step` up to `dense_hi` and geometrically spaced with
/// `geom_points` points beyond, which catches the large-x maximizers.
struct ScanConfig {
  std::optional<double> x_lo;  // default: max(2, fam.x_min())
  double x_hi = 1e4;
  double step = 1e-3;
  double tol = 1e-9;  // bracket-endpoint refinement tolerance
  double dense_hi = 50.0;
  int geom_points = 5000;
};

enum class Branch { none, concave, convex };

std::string to_string(Branch b);
Branch branch_from_string(const std::string& s);

struct CertFailure {
  std::string condition;
  double x = 0.0;
  double value = 0.0;
};

/// Numeric certificate that a family satisfies the sufficient conditions for
/// a unique interior maximizer of (1 - 1/f(x))^x on the scanned range.
/// branch != none asserts the hypotheses hold numerically on this grid; it is
/// not a symbolic proof.
struct TheoremCertificate {
  bool condition1_ok = false;  // f > 1 at every scanned point
  bool condition2_ok = false;  // analytic derivatives FD-consistent (C^2 proxy)
  bool condition3_ok = false;  // f' > 0 at every scanned point
  Branch branch = Branch::none;
  std::optional<double> a;
  std::optional<double> b;
  /// True when no admissible point with h(a) = 1/2 exists and `a` is instead
  /// the admissible left edge, with h(a) in (1/2, 1) and the objective still
  /// rising there. The maximizer guarantee on (a, b) is unchanged.
  bool a_clipped = false;
  ScanConfig scan;  // x_lo resolved
  std::vector<CertFailure> failures;
  std::vector<std::string> notes;

  bool ok() const { return branch != Branch::none; }
};

/// Checks theorem conditions 1-4 for the family on the scan grid and locates
/// the bracket (a, b) from the crossings of h(x) = f(x) - x f'(x) with 1/2
/// and 1. Condition failures are data, not errors; only an invalid scan
/// configuration throws.
TheoremCertificate verify_conditions(const FamilySpec& fam, ScanConfig scan = {});

/// Numeric reproduction of the analytic claims made for the x^p + (ln x)^{1/p}
/// family: h_p(e) < 1/2 with its maximum in p at 3 W(1/3), h_p(e^2) >= 1,
/// h_p increasing and f'' < 0 on [e, e^2].
struct AppendixBReport {
  bool h_e_below_half = true;
  bool h_e2_at_least_one = true;
  bool h_increasing = true;
  bool f2_negative = true;
  double max_h_e = 0.0;
  double argmax_p = 0.0;        // grid argmax of h_p(e)
  double p_star_analytic = 0.0; // 3 W(1/3)
  double h_e_at_p_star = 0.0;
  double min_h_e2 = 0.0;
  double h_e2_at_half = 0.0;    // h_{1/2}(e^2), analytically e/2
  double h_e2_at_one = 0.0;     // h_1(e^2), analytically 1
  std::vector<CertFailure> failures;

  bool all_ok() const {
    return h_e_below_half && h_e2_at_least_one && h_increasing && f2_negative;
  }
};

AppendixBReport appendix_b_checks(const std::vector<double>& p_grid);

/// Uniform p-grid with `points` points on [0.5, 1], the default grid for
/// appendix checks.
std::vector<double> default_p_grid(int points = 501);

}  // namespace groupopt
