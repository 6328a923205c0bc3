#ifndef MARKOVDYN_WALK_ORACLE_HPP_
#define MARKOVDYN_WALK_ORACLE_HPP_

#include <cstdint>

#include "markovdyn/operators.hpp"

namespace markovdyn {

// Monte Carlo simulation of the walk itself, independent of the operator
// algebra. Trajectories are grouped in fixed blocks of kBlockSize; block b
// draws from std::mt19937_64 seeded with seed_seq{seed_lo, seed_hi, b}, and a
// uniform variate is the top 53 bits of one engine output. Statistics are
// integer counts, so any block scheduling gives bit-identical results.
struct WalkConfig {
  Lattice lattice = Lattice::HalfLine;
  PSeq pseq = PSeq::constant(0.5);
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
};

inline constexpr std::uint64_t kBlockSize = 4096;

struct Estimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Frequency of X_n = j given X_0 = i, with binomial standard error.
Estimate estimate_transition(const WalkConfig& cfg, int n, Index i, Index j);

// Mean number of visits to i during steps 1..horizon, started at i; estimates
// sum_{n=1}^{horizon} (A^n)_{i,i}.
Estimate estimate_return_mass(const WalkConfig& cfg, int horizon, Index i);

}  // namespace markovdyn

#endif  // MARKOVDYN_WALK_ORACLE_HPP_
