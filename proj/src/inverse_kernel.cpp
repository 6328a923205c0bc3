#include "markovdyn/inverse_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace markovdyn {
namespace {

void require_half_line(const BandedOp& op) {
  if (op.lattice() != Lattice::HalfLine) {
    throw std::invalid_argument("right inverse and kernel basis need a half-line walk");
  }
}

}  // namespace

InverseResult right_inverse_detailed(const BandedOp& op, const FinSeq& v,
                                     const TruncationPolicy& policy) {
  require_half_line(op);
  if (v.lattice() != Lattice::HalfLine) {
    throw std::invalid_argument("right inverse needs a half-line sequence");
  }
  InverseResult result;
  const FinSeq vt = v.trimmed();
  if (vt.size() == 0) {
    result.tail_certified = true;
    return result;
  }
  std::vector<Complex> u{Complex{}};
  double max_abs = 0.0;
  const Index v_end = vt.end();
  // Beyond this index every coordinate follows the homogeneous recurrence.
  const Index free_from = v_end + 1;
  const PSeq& pseq = op.pseq();
  const Index regular = pseq.regular_from();
  const double regular_rho = pseq.sup_ratio_from(regular);
  for (Index n = 1;; ++n) {
    const double p = op.p(n - 1);
    const Complex back = n >= 2 ? u[static_cast<std::size_t>(n - 2)] : Complex{};
    const Complex un = vt[n - 1] / p + ((p - 1.0) / p) * back;
    u.push_back(un);
    max_abs = std::max(max_abs, std::abs(un));
    if (!std::isfinite(max_abs)) {
      result.tail_bound = std::numeric_limits<double>::infinity();
      break;
    }
    if (n >= free_from) {
      // Remaining coordinates use r_k for k >= n.
      const double rho = n >= regular ? regular_rho : pseq.sup_ratio_from(n);
      const double edge = std::abs(un) + std::abs(u[static_cast<std::size_t>(n - 1)]);
      if (rho < 1.0 && edge * rho / (1.0 - rho) <= policy.rel_tol * max_abs) {
        result.tail_certified = true;
        result.tail_bound = edge * rho / (1.0 - rho);
        break;
      }
    }
    if (n >= policy.hard_cap) {
      result.tail_bound = std::abs(un);
      break;
    }
  }
  result.u = FinSeq(Lattice::HalfLine, 0, std::move(u)).trimmed();
  return result;
}

FinSeq right_inverse(const BandedOp& op, const FinSeq& v, const TruncationPolicy& policy) {
  return right_inverse_detailed(op, v, policy).u;
}

FinSeq right_inverse_power(const BandedOp& op, const FinSeq& v, int n,
                           const TruncationPolicy& policy) {
  if (n < 0) throw std::invalid_argument("negative power");
  FinSeq u = v;
  for (int k = 0; k < n; ++k) u = right_inverse(op, u, policy);
  return u;
}

double right_inverse_norm_bound(const BandedOp& op, const SpaceSpec& space, Index window) {
  require_half_line(op);
  if (op.pseq().sup_ratio_from(op.pseq().regular_from()) >= 1.0) {
    return std::numeric_limits<double>::infinity();
  }
  std::vector<double> row_sums(static_cast<std::size_t>(window), 0.0);
  double col_sup = 0.0;
  for (Index j = 0; j < window; ++j) {
    const FinSeq col = right_inverse(op, FinSeq::unit(Lattice::HalfLine, j));
    double col_sum = 0.0;
    for (Index k = col.offset(); k < col.end(); ++k) {
      const double a = std::abs(col[k]);
      col_sum += a;
      if (k < window) row_sums[static_cast<std::size_t>(k)] += a;
    }
    if (!std::isfinite(col_sum)) return std::numeric_limits<double>::infinity();
    col_sup = std::max(col_sup, col_sum);
  }
  const double row_sup = *std::max_element(row_sums.begin(), row_sums.end());
  if (space.sup_normed()) return row_sup;
  const double q = space.q();
  if (q == 1.0) return col_sup;
  return std::pow(col_sup, 1.0 / q) * std::pow(row_sup, 1.0 - 1.0 / q);
}

KernelBasis kernel_basis(const BandedOp& op, int n, Index window, double rel_tol) {
  require_half_line(op);
  if (n < 1) throw std::invalid_argument("kernel order must be positive");
  if (const auto p = op.pseq().constant_value(); p && *p <= 0.5) {
    throw std::domain_error("kernel of W_p^n is trivial for p <= 1/2");
  }
  if (window < 2 * n) throw std::invalid_argument("window too small for kernel order");

  KernelBasis basis;
  basis.order = n;
  const auto N = static_cast<std::size_t>(n);
  std::vector<std::vector<Complex>> coords(N);
  for (std::size_t i = 0; i < N; ++i) {
    coords[i].assign(N, Complex{});
    coords[i][i] = 1.0;
  }
  double max_abs = 1.0;
  bool decayed = false;
  Index k = n;
  for (; k <= window; ++k) {
    // Row j = k - n of A^n, obtained as e_j^T A^n.
    const FinSeq row = op.power_apply_transpose(n, FinSeq::unit(Lattice::HalfLine, k - n));
    const double lead = row[k].real();
    for (std::size_t i = 0; i < N; ++i) {
      Complex acc{};
      for (Index m = std::max<Index>(row.offset(), 0); m < k; ++m) {
        acc += row[m] * coords[i][static_cast<std::size_t>(m)];
      }
      const Complex value = -acc / lead;
      coords[i].push_back(value);
      max_abs = std::max(max_abs, std::abs(value));
    }
    // Stop once the last 2n coordinates of every vector are negligible; the
    // recurrence for A^n u = 0 has order 2n in the interior.
    if (k >= 3 * n) {
      bool small = true;
      for (std::size_t i = 0; i < N && small; ++i) {
        for (Index m = k - 2 * n + 1; m <= k; ++m) {
          if (std::abs(coords[i][static_cast<std::size_t>(m)]) > rel_tol * max_abs) {
            small = false;
            break;
          }
        }
      }
      if (small) {
        decayed = true;
        break;
      }
    }
  }
  basis.decayed = decayed;
  basis.computed_window = std::min(k, window);
  for (auto& c : coords) {
    while (c.size() > N && std::abs(c.back()) <= rel_tol * max_abs) c.pop_back();
    basis.vectors.emplace_back(Lattice::HalfLine, 0, std::move(c));
  }
  return basis;
}

DenseApprox dense_approx(const FinSeq& x, const BandedOp& op, const SpaceSpec& space,
                         Index window) {
  DenseApprox out;
  const FinSeq xt = x.trimmed();
  if (xt.size() == 0) return out;
  if (xt.lattice() != Lattice::HalfLine) {
    throw std::invalid_argument("dense approximation needs a half-line sequence");
  }
  const int n = static_cast<int>(xt.end());
  const KernelBasis basis = kernel_basis(op, n, std::max<Index>(window, 2 * n));
  FinSeq approx(Lattice::HalfLine);
  for (int i = 0; i < n; ++i) {
    const Complex xi = xt[i];
    if (xi != Complex{}) approx += xi * basis.vectors[static_cast<std::size_t>(i)];
  }
  out.order = n;
  out.error = norm(approx - xt, space);
  out.approximation = std::move(approx);
  return out;
}

}  // namespace markovdyn
