#ifndef MARKOVDYN_INVERSE_KERNEL_HPP_
#define MARKOVDYN_INVERSE_KERNEL_HPP_

#include <vector>

#include "markovdyn/operators.hpp"

namespace markovdyn {

// Where to cut the infinite tail of S v. Past the support of v the two parity
// chains evolve as u_n = r_{n-1} u_{n-2} with r_k = (p_k - 1)/p_k, so with
// rho = sup |r_k| < 1 the dropped tail is at most
// (|u_n| + |u_{n-1}|) rho / (1 - rho). Cutting happens once that bound is
// below rel_tol * max |u|. Without a ratio bound the recurrence runs to
// hard_cap.
struct TruncationPolicy {
  double rel_tol = 1e-16;
  Index hard_cap = 200000;
};

struct InverseResult {
  FinSeq u{Lattice::HalfLine};
  bool tail_certified = false;
  // Bound on the sup of the dropped tail (or last magnitude when uncertified).
  double tail_bound = 0.0;
};

// Right inverse S of a half-line walk: u_0 = 0, u_1 = v_0 / p_0,
// u_n = v_{n-1} / p_{n-1} + r_{n-1} u_{n-2}. A S v = v up to truncation.
InverseResult right_inverse_detailed(const BandedOp& op, const FinSeq& v,
                                     const TruncationPolicy& policy = {});
FinSeq right_inverse(const BandedOp& op, const FinSeq& v,
                     const TruncationPolicy& policy = {});
// S^n v; coordinates 0..n-1 are exactly zero.
FinSeq right_inverse_power(const BandedOp& op, const FinSeq& v, int n,
                           const TruncationPolicy& policy = {});

// Operator-norm bound of S in `space`, measured from the columns S e_j for
// j < window: the sup of row sums for sup-normed spaces, of column sums for
// l1, and the Schur bound col^{1/q} row^{1-1/q} for lq. For constant p > 1/2
// this reproduces 1/(2p - 1). Returns +inf when the tail ratio bound is >= 1.
double right_inverse_norm_bound(const BandedOp& op, const SpaceSpec& space,
                                Index window = 400);

struct KernelBasis {
  int order = 0;
  // V_{0,n}, ..., V_{n-1,n}; V_{i,n}(k) = delta_{ik} for k < n.
  std::vector<FinSeq> vectors;
  // True when every vector decayed below tolerance before the window cap.
  bool decayed = false;
  Index computed_window = 0;
};

// Basis of ker A^n for a half-line walk. Coordinates past n are solved row by
// row from A^n: row j gives u_{j+n}, using the leading coefficient
// (A^n)_{j,j+n} = p_j ... p_{j+n-1} > 0. Entries are computed up to
// `window` and trailing entries below rel_tol * max are dropped.
//
// Throws std::domain_error for constant p <= 1/2, where the kernel is
// trivial in every space of interest.
KernelBasis kernel_basis(const BandedOp& op, int n, Index window = 4000,
                         double rel_tol = 1e-17);

struct DenseApprox {
  FinSeq approximation{Lattice::HalfLine};
  double error = 0.0;
  int order = 0;
};

// sum_i x_i V_{i,n} with n = end of the support of x, and its distance to x.
DenseApprox dense_approx(const FinSeq& x, const BandedOp& op, const SpaceSpec& space,
                         Index window = 4000);

}  // namespace markovdyn

#endif  // MARKOVDYN_INVERSE_KERNEL_HPP_
