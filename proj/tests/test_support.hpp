#pragma once

// Shared helpers for the test suites: independent oracles (long-double series
// closed form, central finite differences), a small deterministic RNG, and
// stub families used to pin edge-case behavior.

#include <cmath>
#include <cstdint>
#include <mutex>

#include "groupopt/family.hpp"

namespace testsupport {

// Closed form of sum y^n/((n+1)(n+2)) evaluated in long double, with a
// truncated-series switch where the closed form cancels. Independent of the
// library's double-precision evaluation path.
inline long double series_closed_oracle(long double y) {
  if (y < 1e-4L) {
    // Truncation error below y^5/42.
    return 0.5L + y * (1.0L / 6.0L + y * (1.0L / 12.0L + y * (1.0L / 20.0L + y / 30.0L)));
  }
  return ((1.0L - y) * std::log1p(-y) + y) / (y * y);
}

template <typename Fn>
double central_diff(const Fn& fn, double x, double h) {
  return (fn(x + h) - fn(x - h)) / (2.0 * h);
}

// SplitMix64 sequence generator for property tests.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

 private:
  std::uint64_t state_;
};

// Parameterless stub families:
//   constphi5  - f = 5 (member default probability 0.2 at every size)
//   hugef      - f = 1e300 (default probability indistinguishable from 0)
//   nearone    - f = 1 + 1e-13 (phi inside the unusable band near 1)
//   quadratic  - f = 1.3 + 0.05 x^2 (convex; h falls from 1 through 1/2)
inline void ensure_stub_families() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    using groupopt::FamilyDef;
    using groupopt::ParamMap;
    groupopt::register_family(FamilyDef{
        "constphi5",
        {},
        [](const ParamMap&) { return 2.0; },
        [](const ParamMap&) { return 0.0; },
        [](const ParamMap&, double) { return 5.0; },
        [](const ParamMap&, double) { return 0.0; },
        [](const ParamMap&, double) { return 0.0; }});
    groupopt::register_family(FamilyDef{
        "hugef",
        {},
        [](const ParamMap&) { return 2.0; },
        [](const ParamMap&) { return 0.0; },
        [](const ParamMap&, double) { return 1e300; },
        [](const ParamMap&, double) { return 0.0; },
        [](const ParamMap&, double) { return 0.0; }});
    groupopt::register_family(FamilyDef{
        "nearone",
        {},
        [](const ParamMap&) { return 2.0; },
        [](const ParamMap&) { return 0.0; },
        [](const ParamMap&, double) { return 1.0 + 1e-13; },
        [](const ParamMap&, double) { return 0.0; },
        [](const ParamMap&, double) { return 0.0; }});
    groupopt::register_family(FamilyDef{
        "quadratic",
        {},
        [](const ParamMap&) { return 2.0; },
        [](const ParamMap&) { return 0.0; },
        [](const ParamMap&, double x) { return 1.3 + 0.05 * x * x; },
        [](const ParamMap&, double x) { return 0.1 * x; },
        [](const ParamMap&, double) { return 0.1; }});
  });
}

}  // namespace testsupport
