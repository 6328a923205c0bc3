#ifndef MARKOVDYN_SPECTRAL_HPP_
#define MARKOVDYN_SPECTRAL_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "markovdyn/classify.hpp"
#include "markovdyn/operators.hpp"

namespace markovdyn {

enum class Membership { Yes, No, Undetermined };
std::string_view to_string(Membership m);

// Companion matrix of the eigenvector recurrence of W_p,
//   [q_n, q_{n-1}]^T = M [q_{n-1}, q_{n-2}]^T,  M = [[lambda/p, (p-1)/p], [1, 0]].
// Its eigenvalues are the roots of p z^2 - lambda z + (1 - p).
struct TransferMatrix {
  Complex a11, a12, a21, a22;

  static TransferMatrix for_walk(double p, Complex lambda);
  Complex det() const { return a11 * a22 - a12 * a21; }
  Complex trace() const { return a11 + a22; }
  std::array<Complex, 2> eigenvalues() const;
};

// q_0 .. q_{n_max} with q_0 = 1, q_1 = (lambda + p - 1)/p and
// p q_{n+2} = lambda q_{n+1} - (1 - p) q_n: coordinates of the only
// candidate eigenvector of W_p for lambda (up to scale).
std::vector<Complex> eigen_sequence(double p, Complex lambda, int n_max);

struct SpectrumVerdict {
  Complex lambda;
  SpaceSpec space = SpaceSpec::c0();
  Membership member = Membership::Undetermined;
  Complex alpha, beta;
  Complex discriminant;  // lambda^2 - 4 p (1 - p)
  bool defective = false;
  // q_n = c alpha^n + d beta^n, or (c + d n) theta^n with theta = alpha when
  // defective.
  Complex coef_c, coef_d;
  // Largest root modulus carrying a nonzero coefficient.
  double dominant_modulus = 0.0;
  bool on_unit_circle_exact = false;
  std::string reason;
  // Diagnostics from eigen_sequence over [0, n_max].
  double max_abs_q = 0.0;
  double last_abs_q = 0.0;
};

struct SpectrumTolerances {
  double defective_band = 1e-12;  // |discriminant| below this is defective
  double circle_band = 1e-8;      // |modulus - 1| below this is undetermined
  double zero_coefficient = 1e-12;
  int n_max = 200;
};

// Decides whether lambda is an eigenvalue of W_p on `space`.
SpectrumVerdict point_spectrum_probe(double p, Complex lambda, const SpaceSpec& space,
                                     const SpectrumTolerances& tol = {});

// Radius of the largest disk centred at 0 whose polar grid points
// (`radial` radii times `angular` angles) all certify membership. A lower
// estimate for the disk of eigenvalues, not a closed form.
double certified_disk_radius(double p, const SpaceSpec& space, int radial = 50,
                             int angular = 16, double r_max = 1.0);

// Eigenvector of G at 0 with u_0 = 1: u_1 = (p_0 - 1)/p_0,
// u_n = ((p_{n-1} - 1)/p_{n-1}) u_{n-2}. |u_n| = w_n.
std::vector<double> g_zero_eigenvector(const PSeq& pseq, Index n_max);

// Left eigenvector of G at 0 (u G = 0) with u_0 = 1: from column 0,
// u_1 = -(1 - p_0)/(1 - p_1); from column j >= 1,
// p_{j-1} u_{j-1} + (1 - p_{j+1}) u_{j+1} = 0.
std::vector<double> dual_zero_eigenvector(const PSeq& pseq, Index n_max);

// Dual pairing used for point-spectrum obstructions:
//   c0 -> l1 (summable), l1 -> linf (bounded), lq -> l^{q/(q-1)} (summable).
std::optional<SpaceSpec> dual_space(const SpaceSpec& space);

struct DualVerdict {
  SpaceSpec space = SpaceSpec::c0();
  std::optional<SpaceSpec> dual;
  // 0 in the point spectrum of G' on the dual space.
  Membership zero_in_dual_spectrum = Membership::Undetermined;
  // Emitted when zero_in_dual_spectrum is Yes: lambda G is then not
  // hypercyclic for any lambda.
  bool not_hypercyclic = false;
  SeriesJudgement eigenvector_test;
  // The weight-sequence condition stated for the same conclusion:
  // sum 1/w_n (c0), 1/w_n bounded (l1), sum w_n^{-q/(q-1)} (lq).
  SeriesJudgement weight_condition;
  std::vector<double> eigenvector;
  std::string reason;
};

DualVerdict dual_zero_obstruction(const PSeq& pseq, const SpaceSpec& space,
                                  Index n_max = 2000, const ConvergencePolicy& policy = {});

struct SymmetricPoint {
  double lambda = 0.0;
  std::array<Complex, 2> roots;
  double bound = 0.0;   // |c| + |d|
  double max_abs = 0.0; // max |q_n| over the probed range
  bool bounded = false;
};

struct SymmetricIntervalReport {
  Lattice lattice = Lattice::HalfLine;
  int n_max = 0;
  bool symmetric = false;  // entry(i,j) == entry(j,i) on the checked window
  std::vector<SymmetricPoint> points;
  int certified = 0;
  // At least two eigenvalues of W' = W on linf, so W is not supercyclic on l1.
  bool not_supercyclic_on_l1 = false;
};

// p = 1/2. For each lambda, certifies that the eigen-sequence is bounded:
// the roots lambda +- i sqrt(1 - lambda^2) lie on the unit circle, so
// |q_n| <= |c| + |d|, and the computed q_n are checked against that bound on
// [0, n_max] (on [-n_max, n_max] for the line).
SymmetricIntervalReport symmetric_dual_interval_check(
    int n_max, const std::vector<double>& lambdas, Lattice lattice = Lattice::HalfLine);

}  // namespace markovdyn

#endif  // MARKOVDYN_SPECTRAL_HPP_
