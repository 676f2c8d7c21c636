#include "groupopt/simulation.hpp"

#include <cmath>
#include <sstream>

#include "groupopt/analysis.hpp"
#include "groupopt/errors.hpp"

namespace groupopt {

double analytic_group_prob(const FamilySpec& fam, int k) {
  if (k < 2) throw domain_error("analytic_group_prob: group size must be >= 2");
  if (static_cast<double>(k) < fam.x_min()) {
    std::ostringstream os;
    os << "analytic_group_prob: k=" << k << " below the admissible domain (x_min="
       << fam.x_min() << ")";
    throw domain_error(os.str());
  }
  return group_success_prob(fam, static_cast<double>(k));
}

SimulationEstimate simulate_group(const FamilySpec& fam, int k, long long trials,
                                  std::uint64_t seed) {
  if (trials < 1) throw domain_error("simulate_group: trials must be >= 1");
  if (k < 2 || static_cast<double>(k) < fam.x_min()) {
    throw domain_error("simulate_group: inadmissible group size");
  }
  const double member_ok = 1.0 - default_prob(fam, static_cast<double>(k));

  const CounterRng rng(seed);
  long long successes = 0;
  for (long long t = 0; t < trials; ++t) {
    const std::uint64_t base = static_cast<std::uint64_t>(t) * k;
    bool all_ok = true;
    for (int m = 0; m < k; ++m) {
      if (!(rng.uniform01(base + m) < member_ok)) {
        all_ok = false;
        break;  // remaining draws are indexed, not sequential; skipping is safe
      }
    }
    if (all_ok) ++successes;
  }

  SimulationEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.estimate = static_cast<double>(successes) / static_cast<double>(trials);
  est.stderr_ = std::sqrt(est.estimate * (1.0 - est.estimate) /
                          static_cast<double>(trials));
  return est;
}

std::pair<int, double> brute_force_integer_argmax(const FamilySpec& fam,
                                                  int k_min, int k_max) {
  if (k_min < 2 || !(k_min < k_max)) {
    throw domain_error("brute_force_integer_argmax: need 2 <= k_min < k_max");
  }
  int best_k = -1;
  double best_p = -1.0;
  for (int k = k_min; k <= k_max; ++k) {
    double p;
    try {
      p = analytic_group_prob(fam, k);
    } catch (const domain_error&) {
      continue;  // below the family domain (e.g. ln ln families under e^e)
    }
    if (p > best_p) {
      best_p = p;
      best_k = k;
    }
  }
  if (best_k < 0) {
    throw domain_error("brute_force_integer_argmax: no admissible k in range");
  }
  return {best_k, best_p};
}

}  // namespace groupopt
