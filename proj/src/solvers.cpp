#include "groupopt/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "groupopt/errors.hpp"

namespace groupopt {

double find_root_bracketed(const ScalarFn& fn, double lo, double hi, double xtol) {
  if (!(lo < hi)) throw domain_error("find_root_bracketed: lo must be < hi");
  double flo = fn(lo);
  double fhi = fn(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!(flo * fhi < 0.0)) {
    std::ostringstream os;
    os << "find_root_bracketed: no sign change on [" << lo << ", " << hi
       << "] (f(lo)=" << flo << ", f(hi)=" << fhi << ")";
    throw domain_error(os.str());
  }

  for (int iter = 0; iter < 200; ++iter) {
    if (hi - lo <= xtol) return 0.5 * (lo + hi);

    double x = 0.5 * (lo + hi);
    if (iter % 2 == 1 && flo != fhi) {
      // Secant candidate, accepted only well inside the bracket.
      const double xs = lo - flo * (hi - lo) / (fhi - flo);
      const double margin = 0.01 * (hi - lo);
      if (xs > lo + margin && xs < hi - margin) x = xs;
    }
    const double fx = fn(x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
  }
  throw domain_error("find_root_bracketed: iteration limit exceeded");
}

namespace {

// Least-squares cubic through samples of fn around v; returns the stationary
// point nearest the center when it is a well-formed interior maximum,
// otherwise v unchanged. Pulls the peak location out of the round-off plateau
// that limits golden section; the cubic term removes the skew bias a plain
// parabola picks up on asymmetric objectives.
double local_fit_polish(const ScalarFn& fn, double v, double lo, double hi) {
  const double w = 2e-4 * std::max(1.0, std::abs(v));
  const double a = std::max(lo, v - w);
  const double b = std::min(hi, v + w);
  if (!(b - a > 0.0)) return v;
  const double c = 0.5 * (a + b), half = 0.5 * (b - a);

  // The peak digits sit far below |fn|; centering on fn(c) keeps the moment
  // sums from losing them to cancellation.
  const double y_ref = fn(c);
  if (!std::isfinite(y_ref)) return v;

  constexpr int kSamples = 41;
  double s2 = 0.0, s4 = 0.0, s6 = 0.0;
  double sy = 0.0, syt = 0.0, syt2 = 0.0, syt3 = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double t = -1.0 + 2.0 * i / (kSamples - 1);
    const double y = fn(c + t * half) - y_ref;
    if (!std::isfinite(y)) return v;
    const double t2 = t * t;
    s2 += t2;
    s4 += t2 * t2;
    s6 += t2 * t2 * t2;
    sy += y;
    syt += y * t;
    syt2 += y * t2;
    syt3 += y * t2 * t;
  }
  const double n = kSamples;
  // Odd block: [s2 s4; s4 s6] [c1 c3] = [syt syt3].
  const double odd_det = s2 * s6 - s4 * s4;
  if (odd_det <= 0.0) return v;
  const double c1 = (syt * s6 - syt3 * s4) / odd_det;
  const double c3 = (syt3 * s2 - syt * s4) / odd_det;
  // Even block gives the curvature.
  const double even_det = s4 - s2 * s2 / n;
  if (even_det <= 0.0) return v;
  const double c2 = (syt2 - s2 * sy / n) / even_det;
  if (!(c2 < 0.0)) return v;  // not concave at this scale

  double t_star = -c1 / (2.0 * c2);
  for (int i = 0; i < 4; ++i) {
    const double deriv = c1 + 2.0 * c2 * t_star + 3.0 * c3 * t_star * t_star;
    const double deriv2 = 2.0 * c2 + 6.0 * c3 * t_star;
    if (deriv2 >= 0.0) break;
    t_star -= deriv / deriv2;
  }
  if (!(std::abs(t_star) <= 1.0)) return v;
  return std::clamp(c + t_star * half, lo, hi);
}

}  // namespace

double golden_section_max(const ScalarFn& fn, double lo, double hi,
                          double rel_tol, int max_iter) {
  if (!(lo < hi)) throw domain_error("golden_section_max: lo must be < hi");
  const double lo0 = lo, hi0 = hi;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;

  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = fn(c), fd = fn(d);
  const double xtol = std::max(rel_tol * (hi - lo), 4e-16 * std::max(std::abs(lo), std::abs(hi)));

  for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = fn(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = fn(d);
    }
  }
  const double v = 0.5 * (lo + hi);
  return local_fit_polish(fn, v, lo0, hi0);
}

}  // namespace groupopt
