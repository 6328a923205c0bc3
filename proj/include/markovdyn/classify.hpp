#ifndef MARKOVDYN_CLASSIFY_HPP_
#define MARKOVDYN_CLASSIFY_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "markovdyn/operators.hpp"

namespace markovdyn {

// Finite-horizon verdict on a positive series sum t_n.
//
// Convergent: the last `window` terms are all below `floor`, or the last
// `window` ratios t_n / t_{n-1} are all <= 1 - delta.
// Divergent: a partial sum exceeds `ceiling`, or the last `window` ratios are
// all >= 1 + delta.
// Anything else is undetermined. Convergence rules are tried first.
struct ConvergencePolicy {
  int window = 20;
  double delta = 0.05;
  double floor = 1e-14;
  double ceiling = 1e6;
};

enum class SeriesBehavior { Convergent, Divergent, Undetermined };
std::string_view to_string(SeriesBehavior b);

struct SeriesJudgement {
  SeriesBehavior behavior = SeriesBehavior::Undetermined;
  std::string rule;
};

SeriesJudgement judge_series(std::span<const double> terms,
                             const ConvergencePolicy& policy = {});

// Boundedness of a positive sequence, reported as Convergent (bounded),
// Divergent (unbounded) or Undetermined. Bounded when the tail is eventually
// non-increasing (last `window` ratios <= 1 + 1e-12); unbounded when the last
// ratios are >= 1 + delta or a term passes `ceiling`.
SeriesJudgement judge_bounded(std::span<const double> terms,
                              const ConvergencePolicy& policy = {});

// Sums consecutive pairs t_{2m} + t_{2m+1}. Sequences built from alternating
// parity chains have monotone pair sums even when the raw terms zig-zag.
std::vector<double> pair_blocks(std::span<const double> terms);

// Terms k = 1..N of the transience series: prod_{k=1}^{n} (1 - p_k) / p_k.
// Once a running product passes 1e300 every later term is +inf.
std::vector<double> s1_terms(const PSeq& pseq, Index horizon);
// Terms of the positive-recurrence series:
// prod_{k=0}^{n-1} p_k / prod_{k=1}^{n} (1 - p_k).
std::vector<double> s2_terms(const PSeq& pseq, Index horizon);
double s1_partial(const PSeq& pseq, Index horizon);
double s2_partial(const PSeq& pseq, Index horizon);

// w_n: even n uses (1-p_k)/p_k over odd k < n, odd n over even k < n.
double weight_w(const PSeq& pseq, Index n);
// w_1 .. w_{n_max} (index 0 of the result is w_1).
std::vector<double> weight_sequence(const PSeq& pseq, Index n_max);

enum class Recurrence { PositiveRecurrent, NullRecurrent, Transient, Undetermined };
std::string_view to_string(Recurrence r);

struct SeriesTrace {
  std::vector<double> terms;
  std::vector<double> partial_sums;
  SeriesJudgement judgement;
};

struct ClassVerdict {
  Recurrence verdict = Recurrence::Undetermined;
  // exact-constant, exact-periodic, exact-line, heuristic
  std::string method;
  Index horizon = 0;
  SeriesTrace s1;
  SeriesTrace s2;
};

inline constexpr Index kDefaultHorizon = 4000;

// Half-line classification. Constant and periodic sequences are decided
// exactly (sign of p - 1/2, resp. the per-period product of (1-p)/p); other
// sequences go through classify_heuristic. Traces are always filled.
ClassVerdict classify(const PSeq& pseq, Index horizon = kDefaultHorizon,
                      const ConvergencePolicy& policy = {});
ClassVerdict classify_heuristic(const PSeq& pseq, Index horizon = kDefaultHorizon,
                                const ConvergencePolicy& policy = {});

// Line walks: constant p is null recurrent at 1/2 and transient otherwise.
// Non-constant sequences are reported undetermined.
ClassVerdict classify_line(const PSeq& pseq);

// sum_{n=1}^{horizon} (A^n)_{i,i}, computed exactly by banded powers.
double exact_return_mass(const BandedOp& op, int horizon, Index i);

}  // namespace markovdyn

#endif  // MARKOVDYN_CLASSIFY_HPP_
