#pragma once

#include <cstdint>
#include <utility>

#include "groupopt/family.hpp"

namespace groupopt {

/// Monte-Carlo estimate of the group no-default probability.
struct SimulationEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;  // sqrt(p(1-p)/trials)
  long long trials = 0;
  std::uint64_t seed = 0;
};

/// Counter-based uniform generator: draw i is the SplitMix64 output function
/// applied to seed + (i+1) * golden gamma. Any draw can be computed
/// independently of the others, so partitioned runs match serial runs
/// bit-exactly.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  /// Uniform double in [0, 1) for draw index `counter`.
  double uniform01(std::uint64_t counter) const {
    std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

/// (1 - 1/f(k))^k for an integer group size. Throws domain_error when k < 2,
/// k is below the family's admissible domain, or f(k) <= 1.
double analytic_group_prob(const FamilySpec& fam, int k);

/// Simulates `trials` groups of size k: each member defaults independently
/// with probability 1/f(k); the group survives iff no member defaults.
/// Deterministic in (seed, k, trials).
SimulationEstimate simulate_group(const FamilySpec& fam, int k, long long trials,
                                  std::uint64_t seed);

/// Enumerates (1 - 1/f(k))^k over the integers of [k_min, k_max] and returns
/// the argmax and its value. Inadmissible k (below the family domain) are
/// skipped; ties break toward the smaller k.
std::pair<int, double> brute_force_integer_argmax(const FamilySpec& fam,
                                                  int k_min, int k_max);

}  // namespace groupopt
