#ifndef MARKOVDYN_DYNAMICS_HPP_
#define MARKOVDYN_DYNAMICS_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "markovdyn/classify.hpp"
#include "markovdyn/inverse_kernel.hpp"
#include "markovdyn/operators.hpp"

namespace markovdyn {

// Verdicts here refer to the hypotheses of a criterion checked on finite
// data. "yes" means every checked inequality passed; it is not a proof that
// the operator has the property, and "no" only means this criterion did not
// apply.
enum class Property {
  SupercyclicityCriterion,
  FhcChaos,
  NotHypercyclicLowerBound,
  NotSupercyclicObstruction
};
enum class Holds { Yes, No, Undetermined };

std::string_view to_string(Property p);
std::string_view to_string(Holds h);

struct Certificate {
  Property property = Property::FhcChaos;
  Holds holds = Holds::Undetermined;
  std::string pseq;
  std::string space;
  Complex lambda;
  std::string reason;
  std::map<std::string, double> scalars;
  std::map<std::string, std::vector<double>> traces;
};

struct CertificateOptions {
  int n_max = 30;
  int max_kernel_order = 3;
  Tolerance tol{};
  // Relative size below which an orbit point counts as the zero vector.
  double vanish_tol = 1e-8;
};

// Frequent hypercyclicity / chaos criterion for lambda A with the right
// inverse lambda^{-1} S on the kernel vectors V_{i,k}, k <= max_kernel_order:
//  (a) (lambda A)^m x vanishes for m >= k, so sum (lambda A)^m x is a finite sum;
//  (b) |(lambda^{-1} S)^m x| <= rho^m |x| with rho = |S|/|lambda| < 1, |S| the
//      measured operator-norm bound, checked along m <= n_max;
//  (c) A S x = x.
Certificate fhc_chaos_certificate(const BandedOp& op, Complex lambda,
                                  const SpaceSpec& space,
                                  const CertificateOptions& opt = {});

// Supercyclicity criterion with n_k = k on kernel vectors: A^n x vanishes
// eventually and A^n S^n y = y. Needs p > 1/2 for constant p; otherwise the
// eigenvector condition (w_n -> 0 on c0, sum w_n^q < inf on lq) must be
// confirmed first.
Certificate supercyclicity_criterion_certificate(const BandedOp& op,
                                                 const SpaceSpec& space,
                                                 const CertificateOptions& opt = {});

// y = alpha * (1, 1, ...) + perturbation. Since every row of A^n sums to 1,
// (A^n y)_i = alpha + (A^n perturbation)_i exactly. Records the convergence
// to alpha at coordinate i_probe and the ratio |(A^n y)_i| / |A^n y|_inf
// against the lower bound |alpha| / |y|_inf.
Certificate c_space_obstruction(const BandedOp& op, Complex alpha,
                                const FinSeq& perturbation, Index i_probe, int n_max,
                                double convergence_tol = 1e-3);

// |A^n x| >= |1 - 2p|^n |x| for the constant-p walk on the line.
Certificate line_walk_lower_bound(const BandedOp& op, const FinSeq& x, int n,
                                  const SpaceSpec& space, const Tolerance& tol = {});

struct TargetDistance {
  double min_distance = 0.0;
  int argmin = 0;
  std::vector<double> distances;
};

struct OrbitProbeReport {
  bool projective = false;
  int n_max = 0;
  std::vector<TargetDistance> targets;
  std::vector<double> orbit_norms;
  // Times with distance below epsilon to the first target.
  std::vector<int> hit_times;
};

// Distances from A^n x, n = 0..n_max, to each target. In projective mode both
// sides are scaled to unit norm and the orbit point is rotated by the phase
// that aligns it with the target at the target's largest coordinate, so the
// result does not change when x is replaced by c x. Evidence only.
OrbitProbeReport orbit_density_probe(const BandedOp& op, const FinSeq& x,
                                     const std::vector<FinSeq>& targets,
                                     const SpaceSpec& space, int n_max, bool projective,
                                     double epsilon = 0.1);

// Proxy for liminf card(hits in [1, n]) / n: the minimum over the trailing
// window n in [ceil(N/2), N].
double lower_density_estimate(const std::vector<int>& hit_times, int horizon);

// Probe configurations for questions left open; they report orbit data and
// never a verdict.
struct Scenario {
  std::string name;
  std::string question;
  std::string pseq;
  std::string space;
  Lattice lattice = Lattice::HalfLine;
};
const std::vector<Scenario>& open_question_scenarios();

}  // namespace markovdyn

#endif  // MARKOVDYN_DYNAMICS_HPP_
