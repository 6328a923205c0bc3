#include "markovdyn/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace markovdyn {
namespace {

constexpr double kOverflow = 1e300;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> partial_sums(std::span<const double> terms) {
  std::vector<double> sums(terms.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    acc += terms[k];
    if (!(acc <= kOverflow)) acc = kInf;
    sums[k] = acc;
  }
  return sums;
}

SeriesTrace make_trace(std::vector<double> terms, const ConvergencePolicy& policy) {
  SeriesTrace trace;
  trace.partial_sums = partial_sums(terms);
  trace.judgement = judge_series(terms, policy);
  trace.terms = std::move(terms);
  return trace;
}

void check_horizon(Index horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
}

}  // namespace

std::string_view to_string(SeriesBehavior b) {
  switch (b) {
    case SeriesBehavior::Convergent: return "convergent";
    case SeriesBehavior::Divergent: return "divergent";
    case SeriesBehavior::Undetermined: return "undetermined";
  }
  return "?";
}

std::string_view to_string(Recurrence r) {
  switch (r) {
    case Recurrence::PositiveRecurrent: return "PositiveRecurrent";
    case Recurrence::NullRecurrent: return "NullRecurrent";
    case Recurrence::Transient: return "Transient";
    case Recurrence::Undetermined: return "Undetermined";
  }
  return "?";
}

SeriesJudgement judge_series(std::span<const double> terms,
                             const ConvergencePolicy& policy) {
  const auto n = static_cast<std::ptrdiff_t>(terms.size());
  const std::ptrdiff_t K = policy.window;
  if (n >= K && K > 0) {
    const auto tail = terms.subspan(static_cast<std::size_t>(n - K));
    if (std::all_of(tail.begin(), tail.end(),
                    [&](double t) { return t < policy.floor; })) {
      return {SeriesBehavior::Convergent, "terms below floor"};
    }
  }
  bool all_small_ratio = n > K && K > 0;
  bool all_large_ratio = all_small_ratio;
  for (std::ptrdiff_t k = n - K; all_small_ratio && k < n; ++k) {
    const double ratio = terms[static_cast<std::size_t>(k)] /
                         terms[static_cast<std::size_t>(k - 1)];
    if (!(ratio <= 1.0 - policy.delta)) all_small_ratio = false;
  }
  if (all_small_ratio) return {SeriesBehavior::Convergent, "ratio test"};

  double acc = 0.0;
  for (double t : terms) {
    acc += t;
    if (!(acc <= policy.ceiling)) {
      return {SeriesBehavior::Divergent, "partial sum above ceiling"};
    }
  }
  for (std::ptrdiff_t k = n - K; all_large_ratio && k < n; ++k) {
    const double ratio = terms[static_cast<std::size_t>(k)] /
                         terms[static_cast<std::size_t>(k - 1)];
    if (!(ratio >= 1.0 + policy.delta)) all_large_ratio = false;
  }
  if (all_large_ratio) return {SeriesBehavior::Divergent, "ratio test"};
  return {SeriesBehavior::Undetermined, "no rule applied"};
}

SeriesJudgement judge_bounded(std::span<const double> terms,
                              const ConvergencePolicy& policy) {
  for (double t : terms) {
    if (!(t <= policy.ceiling)) return {SeriesBehavior::Divergent, "term above ceiling"};
  }
  const auto n = static_cast<std::ptrdiff_t>(terms.size());
  const std::ptrdiff_t K = policy.window;
  if (n <= K || K <= 0) return {SeriesBehavior::Undetermined, "too few terms"};
  bool non_increasing = true;
  bool growing = true;
  for (std::ptrdiff_t k = n - K; k < n; ++k) {
    const double prev = terms[static_cast<std::size_t>(k - 1)];
    const double cur = terms[static_cast<std::size_t>(k)];
    if (cur > prev * (1.0 + 1e-12)) non_increasing = false;
    if (!(cur >= prev * (1.0 + policy.delta))) growing = false;
  }
  if (non_increasing) return {SeriesBehavior::Convergent, "non-increasing tail"};
  if (growing) return {SeriesBehavior::Divergent, "ratio test"};
  return {SeriesBehavior::Undetermined, "no rule applied"};
}

std::vector<double> pair_blocks(std::span<const double> terms) {
  std::vector<double> blocks;
  blocks.reserve(terms.size() / 2);
  for (std::size_t k = 0; k + 1 < terms.size(); k += 2) {
    blocks.push_back(terms[k] + terms[k + 1]);
  }
  return blocks;
}

std::vector<double> s1_terms(const PSeq& pseq, Index horizon) {
  check_horizon(horizon);
  std::vector<double> terms(static_cast<std::size_t>(horizon));
  double prod = 1.0;
  for (Index n = 1; n <= horizon; ++n) {
    const double p = pseq.at(n);
    prod *= (1.0 - p) / p;
    if (!(prod <= kOverflow)) prod = kInf;
    terms[static_cast<std::size_t>(n - 1)] = prod;
  }
  return terms;
}

std::vector<double> s2_terms(const PSeq& pseq, Index horizon) {
  check_horizon(horizon);
  std::vector<double> terms(static_cast<std::size_t>(horizon));
  double prod = 1.0;
  for (Index n = 1; n <= horizon; ++n) {
    prod *= pseq.at(n - 1) / (1.0 - pseq.at(n));
    if (!(prod <= kOverflow)) prod = kInf;
    terms[static_cast<std::size_t>(n - 1)] = prod;
  }
  return terms;
}

double s1_partial(const PSeq& pseq, Index horizon) {
  return partial_sums(s1_terms(pseq, horizon)).back();
}

double s2_partial(const PSeq& pseq, Index horizon) {
  return partial_sums(s2_terms(pseq, horizon)).back();
}

double weight_w(const PSeq& pseq, Index n) {
  if (n < 1) throw std::invalid_argument("w_n is defined for n >= 1");
  double w = 1.0;
  for (Index k = (n % 2 == 0) ? 1 : 0; k <= n - 1; k += 2) {
    const double p = pseq.at(k);
    w *= (1.0 - p) / p;
  }
  return w;
}

std::vector<double> weight_sequence(const PSeq& pseq, Index n_max) {
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(std::max<Index>(0, n_max)));
  double odd = 1.0;   // running product for odd n
  double even = 1.0;  // running product for even n
  for (Index n = 1; n <= n_max; ++n) {
    const double p = pseq.at(n - 1);
    double& chain = (n % 2 == 1) ? odd : even;
    chain *= (1.0 - p) / p;
    w.push_back(chain);
  }
  return w;
}

ClassVerdict classify_heuristic(const PSeq& pseq, Index horizon,
                                const ConvergencePolicy& policy) {
  ClassVerdict v;
  v.method = "heuristic";
  v.horizon = horizon;
  v.s1 = make_trace(s1_terms(pseq, horizon), policy);
  v.s2 = make_trace(s2_terms(pseq, horizon), policy);
  const auto b1 = v.s1.judgement.behavior;
  const auto b2 = v.s2.judgement.behavior;
  using SB = SeriesBehavior;
  if (b1 == SB::Convergent && b2 != SB::Convergent) {
    v.verdict = Recurrence::Transient;
  } else if (b2 == SB::Convergent && b1 != SB::Convergent) {
    v.verdict = Recurrence::PositiveRecurrent;
  } else if (b1 == SB::Divergent && b2 == SB::Divergent) {
    v.verdict = Recurrence::NullRecurrent;
  } else {
    v.verdict = Recurrence::Undetermined;
  }
  return v;
}

ClassVerdict classify(const PSeq& pseq, Index horizon, const ConvergencePolicy& policy) {
  ClassVerdict v = classify_heuristic(pseq, horizon, policy);
  if (const auto p = pseq.constant_value()) {
    v.method = "exact-constant";
    v.verdict = *p < 0.5   ? Recurrence::PositiveRecurrent
                : *p > 0.5 ? Recurrence::Transient
                           : Recurrence::NullRecurrent;
  } else if (pseq.is_periodic()) {
    // Every window of one period multiplies the S1 terms by the same factor.
    double log_rho = 0.0;
    for (Index k = 0; k < pseq.period(); ++k) {
      const double p = pseq.at(k);
      log_rho += std::log((1.0 - p) / p);
    }
    v.method = "exact-periodic";
    v.verdict = std::abs(log_rho) <= 1e-12 ? Recurrence::NullRecurrent
                : log_rho < 0.0           ? Recurrence::Transient
                                          : Recurrence::PositiveRecurrent;
  }
  return v;
}

ClassVerdict classify_line(const PSeq& pseq) {
  ClassVerdict v;
  v.method = "exact-line";
  if (const auto p = pseq.constant_value()) {
    v.verdict = *p == 0.5 ? Recurrence::NullRecurrent : Recurrence::Transient;
  }
  return v;
}

double exact_return_mass(const BandedOp& op, int horizon, Index i) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  double mass = 0.0;
  FinSeq col = FinSeq::unit(op.lattice(), i);
  for (int n = 1; n <= horizon; ++n) {
    col = op.apply(col);
    mass += col[i].real();
  }
  return mass;
}

}  // namespace markovdyn
