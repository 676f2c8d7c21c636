#include "groupopt/analysis.hpp"

#include <cmath>
#include <sstream>

#include "groupopt/errors.hpp"

namespace groupopt {

namespace {
// phi above this is treated as out of certified territory: 1 - phi would
// carry no relative precision.
constexpr double kMaxPhi = 1.0 - 1e-12;
}  // namespace

double default_prob(const FamilySpec& fam, double x) {
  const double fx = fam.f(x);
  if (!(fx > 1.0)) {
    std::ostringstream os;
    os << "family '" << fam.name() << "' inadmissible at x=" << x
       << ": f(x)=" << fx << " <= 1";
    throw domain_error(os.str());
  }
  const double y = 1.0 / fx;
  if (y >= kMaxPhi) {
    std::ostringstream os;
    os << "family '" << fam.name() << "' inadmissible at x=" << x
       << ": 1 - 1/f(x) below relative precision";
    throw domain_error(os.str());
  }
  return y;
}

double bracket_fn(const FamilySpec& fam, double x) {
  return fam.f(x) - x * fam.f1(x);
}

SeriesResult stationarity_series(double y, double tol) {
  if (!(y >= 0.0) || y >= 1.0) {
    std::ostringstream os;
    os << "stationarity_series: y=" << y << " outside [0, 1)";
    throw domain_error(os.str());
  }
  if (!(tol > 0.0)) throw domain_error("stationarity_series: tol must be > 0");

  constexpr std::size_t kMaxTerms = 1'000'000;
  double sum = 0.0, comp = 0.0;  // Kahan compensation
  double pw = 1.0;               // y^n
  for (std::size_t n = 0;; ++n) {
    const double term = pw / (static_cast<double>(n + 1) * static_cast<double>(n + 2));
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    const double tail =
        pw * y / (static_cast<double>(n + 2) * static_cast<double>(n + 3) * (1.0 - y));
    if (tail <= tol) return {sum + comp, n + 1, tail};
    if (n + 1 >= kMaxTerms) {
      throw domain_error("stationarity_series: term cap reached before convergence");
    }
    pw *= y;
  }
}

double stationarity_series_closed(double y) {
  if (!(y >= 0.0) || y >= 1.0) {
    throw domain_error("stationarity_series_closed: y outside [0, 1)");
  }
  if (y < 1e-4) {
    // Leading terms of the series itself; the closed form loses all relative
    // precision to cancellation here. Error below y^4/30.
    return 0.5 + y * (1.0 / 6.0 + y * (1.0 / 12.0 + y / 20.0));
  }
  return ((1.0 - y) * std::log1p(-y) + y) / (y * y);
}

double stationarity_series_at(const FamilySpec& fam, double x, double tol) {
  const double y = default_prob(fam, x);
  if (y > 0.99) return stationarity_series_closed(y);
  return stationarity_series(y, tol).value;
}

double log_objective(const FamilySpec& fam, double x) {
  return x * std::log1p(-default_prob(fam, x));
}

double group_success_prob(const FamilySpec& fam, double x) {
  return std::exp(log_objective(fam, x));
}

double stationarity(const FamilySpec& fam, double x) {
  const double fx = fam.f(x);
  const double y = default_prob(fam, x);
  // phi' = -f'/f^2, so -x phi' = x f'/f^2.
  return (1.0 - y) * std::log1p(-y) + x * fam.f1(x) / (fx * fx);
}

double lambert_w(double z) {
  if (!(z >= 0.0)) throw domain_error("lambert_w: z must be >= 0");
  if (z == 0.0) return 0.0;
  double w = std::log1p(z);  // good start on the principal branch for z >= 0
  for (int i = 0; i < 100; ++i) {
    const double ew = std::exp(w);
    const double resid = w * ew - z;
    if (std::abs(resid) <= 1e-14 * std::max(1.0, z)) break;
    double step = resid / (ew * (1.0 + w));
    // Damp steps that would overshoot below the branch.
    if (w - step < -1.0) step = (w + 1.0) / 2.0;
    w -= step;
  }
  return w;
}

}  // namespace groupopt
