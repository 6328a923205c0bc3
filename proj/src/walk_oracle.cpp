#include "markovdyn/walk_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace markovdyn {
namespace {

struct Counts {
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
};

class Walker {
 public:
  Walker(const WalkConfig& cfg, std::uint64_t block)
      : lattice_(cfg.lattice), pseq_(cfg.pseq) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                      static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(block),
                      static_cast<std::uint32_t>(block >> 32)};
    engine_.seed(seq);
  }

  Index step(Index x) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const bool right = u < pseq_.at(x);
    if (right) return x + 1;
    if (lattice_ == Lattice::HalfLine && x == 0) return 0;
    return x - 1;
  }

 private:
  Lattice lattice_;
  const PSeq& pseq_;
  std::mt19937_64 engine_;
};

// Runs `per_trajectory` over every trajectory and sums the returned counts.
template <typename F>
Counts run_blocks(const WalkConfig& cfg, F per_trajectory) {
  if (cfg.samples == 0) throw std::invalid_argument("samples must be positive");
  const std::uint64_t blocks = (cfg.samples + kBlockSize - 1) / kBlockSize;
  auto run_block = [&](std::uint64_t b) {
    Walker walker(cfg, b);
    const std::uint64_t first = b * kBlockSize;
    const std::uint64_t last = std::min(cfg.samples, first + kBlockSize);
    Counts c;
    for (std::uint64_t t = first; t < last; ++t) {
      const std::uint64_t v = per_trajectory(walker);
      c.sum += v;
      c.sum_sq += v * v;
    }
    return c;
  };
  const unsigned workers =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(blocks)));
  std::vector<std::future<Counts>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      Counts c;
      for (std::uint64_t b = w; b < blocks; b += workers) {
        const Counts part = run_block(b);
        c.sum += part.sum;
        c.sum_sq += part.sum_sq;
      }
      return c;
    }));
  }
  Counts total;
  for (auto& job : jobs) {
    const Counts part = job.get();
    total.sum += part.sum;
    total.sum_sq += part.sum_sq;
  }
  return total;
}

void check_state(const WalkConfig& cfg, Index i) {
  if (cfg.lattice == Lattice::HalfLine && i < 0) {
    throw std::out_of_range("negative state on the half-line");
  }
}

}  // namespace

Estimate estimate_transition(const WalkConfig& cfg, int n, Index i, Index j) {
  if (n < 0) throw std::invalid_argument("negative step count");
  check_state(cfg, i);
  check_state(cfg, j);
  const Counts c = run_blocks(cfg, [&](Walker& w) -> std::uint64_t {
    Index x = i;
    for (int k = 0; k < n; ++k) x = w.step(x);
    return x == j ? 1 : 0;
  });
  const double N = static_cast<double>(cfg.samples);
  const double phat = static_cast<double>(c.sum) / N;
  return {phat, std::sqrt(phat * (1.0 - phat) / N), cfg.samples, cfg.seed};
}

Estimate estimate_return_mass(const WalkConfig& cfg, int horizon, Index i) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  check_state(cfg, i);
  const Counts c = run_blocks(cfg, [&](Walker& w) -> std::uint64_t {
    Index x = i;
    std::uint64_t visits = 0;
    for (int k = 0; k < horizon; ++k) {
      x = w.step(x);
      if (x == i) ++visits;
    }
    return visits;
  });
  const double N = static_cast<double>(cfg.samples);
  const double mean = static_cast<double>(c.sum) / N;
  const double var = std::max(0.0, static_cast<double>(c.sum_sq) / N - mean * mean);
  return {mean, std::sqrt(var / N), cfg.samples, cfg.seed};
}

}  // namespace markovdyn
