#include "groupopt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "groupopt/analysis.hpp"
#include "groupopt/errors.hpp"
#include "groupopt/solvers.hpp"

namespace groupopt {

namespace {

// Advances from `a` toward `limit` until `fn` is finite with the expected
// sign. Bracket endpoints sit where h equals 1/2 or 1 exactly, so the
// stationarity function can be zero-ish or (at a clipped edge) right at the
// admissibility boundary; a microscopic nudge restores a clean sign.
double advance_endpoint(const ScalarFn& fn, double a, double limit,
                        bool want_positive) {
  double x = a;
  double off = 1e-12 * std::max(1.0, std::abs(a));
  for (int i = 0; i < 60; ++i) {
    try {
      const double v = fn(x);
      if (std::isfinite(v) && (want_positive ? v > 0.0 : v < 0.0)) return x;
    } catch (const domain_error&) {
      // below the admissible edge; keep advancing
    }
    x = want_positive ? a + off : a - off;
    off *= 2.0;
    if (want_positive ? x >= limit : x <= limit) break;
  }
  std::ostringstream os;
  os << "maximize: could not obtain a " << (want_positive ? "positive" : "negative")
     << " stationarity sign near bracket endpoint " << a;
  throw domain_error(os.str());
}

int clamp_k(double k, double k_floor) {
  return static_cast<int>(std::max(k, k_floor));
}

}  // namespace

Optimum maximize(const FamilySpec& fam, const TheoremCertificate& cert,
                 double tol) {
  if (!cert.ok()) {
    throw domain_error("maximize: certificate carries no bracket (branch=none)");
  }
  if (!(tol > 0.0)) throw domain_error("maximize: tol must be > 0");
  const double a = *cert.a;
  const double b = *cert.b;

  const ScalarFn g_fn = [&](double x) { return stationarity(fam, x); };
  const ScalarFn hs_fn = [&](double x) {
    return bracket_fn(fam, x) - stationarity_series_at(fam, x);
  };
  const ScalarFn u_fn = [&](double x) { return log_objective(fam, x); };

  // Interior endpoints with definite signs for the two root formulations.
  const double lo_g = advance_endpoint(g_fn, a, b, /*want_positive=*/true);
  const double hi_g = advance_endpoint(g_fn, b, lo_g, /*want_positive=*/false);

  const double xtol = tol * std::max(1.0, std::abs(b));
  const double x_g = find_root_bracketed(g_fn, lo_g, hi_g, xtol);
  // h - S has the opposite sign of g (g = phi^2 (S - h)); same bracket works.
  const double x_hs = find_root_bracketed(hs_fn, lo_g, hi_g, xtol);
  const double x_u = golden_section_max(u_fn, lo_g, hi_g, 1e-10);

  const double spread = std::max({std::abs(x_g - x_hs), std::abs(x_g - x_u),
                                  std::abs(x_hs - x_u)});
  if (spread > 1e-4) {
    std::ostringstream os;
    os << "maximize: solvers disagree (g-root " << x_g << ", h-S root " << x_hs
       << ", objective max " << x_u
       << "); defective certificate or non-smooth family";
    throw domain_error(os.str());
  }

  Optimum opt;
  opt.x_star = x_g;
  opt.method_agreement = spread;
  opt.a = a;
  opt.b = b;

  // Integer recommendation: compare the objective at floor/ceil, floored at
  // the smallest recommendable size (2, or higher where the family domain
  // starts above 2).
  const double k_floor = std::max(2.0, std::ceil(fam.x_min() - 1e-9));
  const int lo_k = clamp_k(std::floor(opt.x_star), k_floor);
  const int hi_k = clamp_k(std::ceil(opt.x_star), k_floor);
  opt.k_min_boundary = opt.x_star < k_floor;

  double lo_p = group_success_prob(fam, lo_k);
  if (hi_k != lo_k) {
    const double hi_p = group_success_prob(fam, hi_k);
    if (hi_p > lo_p) {
      opt.k_star = hi_k;
      opt.p_no_default = hi_p;
    } else {
      opt.k_star = lo_k;
      opt.p_no_default = lo_p;
    }
  } else {
    opt.k_star = lo_k;
    opt.p_no_default = lo_p;
  }

  opt.k_star_rounded = clamp_k(std::round(opt.x_star), k_floor);
  opt.rounding_mismatch = opt.k_star != opt.k_star_rounded;
  return opt;
}

std::vector<SweepRecord> sweep(const std::string& family_name,
                               const std::string& param_name, double lo,
                               double hi, double step) {
  if (!(lo < hi) || !(step > 0.0)) {
    throw domain_error("sweep: need lo < hi and step > 0");
  }
  std::vector<SweepRecord> records;
  const auto n = static_cast<long long>(std::floor((hi - lo) / step + 0.5)) + 1;
  for (long long i = 0; i < n; ++i) {
    const double v = std::min(lo + i * step, hi);
    const auto fam = make_family(family_name, {{param_name, v}});

    SweepRecord rec;
    rec.param_value = v;
    const auto cert = verify_conditions(fam);
    if (cert.ok()) {
      rec.certified = true;
      rec.a = cert.a;
      rec.b = cert.b;
      rec.optimum = maximize(fam, cert);
    }
    records.push_back(rec);
  }
  return records;
}

NarrowResult narrow_interval(const std::string& family_name,
                             const std::string& param_name, double p_lo,
                             double p_hi, double p_step, double x_lo_init,
                             double x_hi_init, double x_step) {
  if (!(p_lo <= p_hi) || !(p_step > 0.0) || !(x_step > 0.0) ||
      !(x_lo_init < x_hi_init)) {
    throw domain_error("narrow_interval: invalid grid configuration");
  }

  std::vector<FamilySpec> fams;
  const auto np = static_cast<long long>(std::floor((p_hi - p_lo) / p_step + 0.5)) + 1;
  for (long long i = 0; i < np; ++i) {
    const double p = std::min(p_lo + i * p_step, p_hi);
    fams.push_back(make_family(family_name, {{param_name, p}}));
  }

  // x grid: multiples of x_step inside [x_lo_init, x_hi_init].
  const auto k_lo = static_cast<long long>(std::ceil(x_lo_init / x_step - 1e-9));
  const auto k_hi = static_cast<long long>(std::floor(x_hi_init / x_step + 1e-9));

  NarrowResult res;
  res.x_lo = x_lo_init;
  res.x_hi = x_hi_init;
  for (long long k = k_lo; k <= k_hi; ++k) {
    double x = k * x_step;
    // Snap k * step to its decimal value (0.1 steps would otherwise
    // accumulate to 3.4000000000000004); the sign certificate then applies
    // to the reported point exactly.
    if (std::abs(x) < 1e3) x = std::round(x * 1e12) / 1e12;
    double mn = 1e300, mx = -1e300;
    for (const auto& fam : fams) {
      const double g = stationarity(fam, x);
      mn = std::min(mn, g);
      mx = std::max(mx, g);
    }
    if (mn > 0.0) {
      res.x_lo = x;  // grid min of decreasing-in-x functions: later x override
      res.found_lo = true;
    }
    if (mx < 0.0 && !res.found_hi) {
      res.x_hi = x;
      res.found_hi = true;
    }
  }
  return res;
}

}  // namespace groupopt
