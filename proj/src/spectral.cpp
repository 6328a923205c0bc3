#include "markovdyn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace markovdyn {
namespace {

void check_p(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
}

std::vector<double> abs_values(const std::vector<double>& u) {
  std::vector<double> a(u.size());
  std::transform(u.begin(), u.end(), a.begin(), [](double x) { return std::abs(x); });
  return a;
}

std::vector<double> powered(std::vector<double> terms, double exponent) {
  for (double& t : terms) t = std::pow(t, exponent);
  return terms;
}

}  // namespace

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::Yes: return "yes";
    case Membership::No: return "no";
    case Membership::Undetermined: return "undetermined";
  }
  return "?";
}

TransferMatrix TransferMatrix::for_walk(double p, Complex lambda) {
  check_p(p);
  return {lambda / p, Complex((p - 1.0) / p), Complex(1.0), Complex(0.0)};
}

std::array<Complex, 2> TransferMatrix::eigenvalues() const {
  const Complex tr = trace();
  const Complex d = det();
  const Complex root = std::sqrt(tr * tr - 4.0 * d);
  // Larger root first, the other from the product to avoid cancellation.
  const Complex big = std::abs(tr + root) >= std::abs(tr - root) ? (tr + root) / 2.0
                                                                  : (tr - root) / 2.0;
  const Complex small = big == Complex{} ? Complex{} : d / big;
  return {big, small};
}

std::vector<Complex> eigen_sequence(double p, Complex lambda, int n_max) {
  check_p(p);
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  std::vector<Complex> q(static_cast<std::size_t>(n_max) + 1);
  q[0] = 1.0;
  q[1] = (lambda + p - 1.0) / p;
  for (std::size_t n = 0; n + 2 < q.size(); ++n) {
    q[n + 2] = (lambda * q[n + 1] - (1.0 - p) * q[n]) / p;
  }
  return q;
}

SpectrumVerdict point_spectrum_probe(double p, Complex lambda, const SpaceSpec& space,
                                     const SpectrumTolerances& tol) {
  check_p(p);
  SpectrumVerdict v;
  v.lambda = lambda;
  v.space = space;
  v.discriminant = lambda * lambda - 4.0 * p * (1.0 - p);
  const auto roots = TransferMatrix::for_walk(p, lambda).eigenvalues();
  v.alpha = roots[0];
  v.beta = roots[1];
  const Complex q1 = (lambda + p - 1.0) / p;

  double modulus = 0.0;
  bool polynomial = false;
  if (std::abs(v.discriminant) < tol.defective_band) {
    v.defective = true;
    const Complex theta = lambda / (2.0 * p);
    v.alpha = v.beta = theta;
    v.coef_c = 1.0;
    v.coef_d = q1 / theta - 1.0;
    polynomial = std::abs(v.coef_d) > tol.zero_coefficient;
    modulus = std::abs(theta);
  } else {
    v.coef_d = (q1 - v.alpha) / (v.beta - v.alpha);
    v.coef_c = 1.0 - v.coef_d;
    const double scale = std::abs(v.coef_c) + std::abs(v.coef_d);
    if (std::abs(v.coef_c) > tol.zero_coefficient * scale) {
      modulus = std::max(modulus, std::abs(v.alpha));
    }
    if (std::abs(v.coef_d) > tol.zero_coefficient * scale) {
      modulus = std::max(modulus, std::abs(v.beta));
    }
    // Real lambda with a negative discriminant gives a conjugate pair whose
    // common modulus is sqrt(det M) = sqrt((1-p)/p), known without rounding
    // from the root solver.
    if (lambda.imag() == 0.0 && v.discriminant.real() < -tol.defective_band) {
      const double det = (1.0 - p) / p;
      modulus = std::sqrt(det);
      v.on_unit_circle_exact = det == 1.0;
    }
  }
  v.dominant_modulus = modulus;

  const auto q = eigen_sequence(p, lambda, tol.n_max);
  for (const Complex& z : q) v.max_abs_q = std::max(v.max_abs_q, std::abs(z));
  v.last_abs_q = std::abs(q.back());

  const bool sup_space = space.kind() == SpaceSpec::Kind::LInf;
  if (v.on_unit_circle_exact) {
    // Distinct unimodular roots: |q_n| <= |c| + |d| but q_n does not tend to 0.
    v.member = sup_space ? Membership::Yes : Membership::No;
    v.reason = "conjugate roots exactly on the unit circle";
  } else if (modulus < 1.0 - tol.circle_band) {
    v.member = Membership::Yes;
    v.reason = "dominant root inside the unit disk";
  } else if (modulus > 1.0 + tol.circle_band) {
    v.member = Membership::No;
    v.reason = "dominant root outside the unit disk";
  } else {
    v.member = Membership::Undetermined;
    v.reason = polynomial ? "defective root on the unit circle band"
                          : "dominant root within the unit circle band";
  }
  return v;
}

double certified_disk_radius(double p, const SpaceSpec& space, int radial, int angular,
                             double r_max) {
  if (point_spectrum_probe(p, 0.0, space).member != Membership::Yes) return 0.0;
  double certified = 0.0;
  for (int k = 1; k <= radial; ++k) {
    const double r = r_max * k / radial;
    for (int a = 0; a < angular; ++a) {
      const double phi = 2.0 * std::numbers::pi * a / angular;
      if (point_spectrum_probe(p, std::polar(r, phi), space).member != Membership::Yes) {
        return certified;
      }
    }
    certified = r;
  }
  return certified;
}

std::vector<double> g_zero_eigenvector(const PSeq& pseq, Index n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  std::vector<double> u(static_cast<std::size_t>(n_max) + 1);
  u[0] = 1.0;
  const double p0 = pseq.at(0);
  u[1] = (p0 - 1.0) / p0;
  for (Index n = 2; n <= n_max; ++n) {
    const double p = pseq.at(n - 1);
    u[static_cast<std::size_t>(n)] = ((p - 1.0) / p) * u[static_cast<std::size_t>(n - 2)];
  }
  return u;
}

std::vector<double> dual_zero_eigenvector(const PSeq& pseq, Index n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  std::vector<double> u(static_cast<std::size_t>(n_max) + 1);
  u[0] = 1.0;
  u[1] = -(1.0 - pseq.at(0)) / (1.0 - pseq.at(1));
  for (Index n = 0; n + 2 <= n_max; ++n) {
    u[static_cast<std::size_t>(n + 2)] =
        pseq.at(n) / (pseq.at(n + 2) - 1.0) * u[static_cast<std::size_t>(n)];
  }
  return u;
}

std::optional<SpaceSpec> dual_space(const SpaceSpec& space) {
  switch (space.kind()) {
    case SpaceSpec::Kind::C0: return SpaceSpec::lq(1.0);
    case SpaceSpec::Kind::Lq:
      if (space.q() == 1.0) return SpaceSpec::linf();
      return SpaceSpec::lq(space.q() / (space.q() - 1.0));
    default: return std::nullopt;
  }
}

DualVerdict dual_zero_obstruction(const PSeq& pseq, const SpaceSpec& space, Index n_max,
                                  const ConvergencePolicy& policy) {
  DualVerdict v;
  v.space = space;
  v.dual = dual_space(space);
  v.eigenvector = dual_zero_eigenvector(pseq, n_max);
  if (!v.dual) {
    v.reason = "no dual pairing for " + space.name();
    return v;
  }
  const auto magnitudes = abs_values(v.eigenvector);
  const auto inv_w = [&] {
    auto w = weight_sequence(pseq, n_max);
    for (double& x : w) x = 1.0 / x;
    return w;
  }();
  if (v.dual->kind() == SpaceSpec::Kind::LInf) {
    v.eigenvector_test = judge_bounded(pair_blocks(magnitudes), policy);
    v.weight_condition = judge_bounded(pair_blocks(inv_w), policy);
  } else {
    const double r = v.dual->q();
    v.eigenvector_test = judge_series(pair_blocks(powered(magnitudes, r)), policy);
    v.weight_condition = judge_series(pair_blocks(powered(inv_w, r)), policy);
  }
  switch (v.eigenvector_test.behavior) {
    case SeriesBehavior::Convergent:
      v.zero_in_dual_spectrum = Membership::Yes;
      v.not_hypercyclic = true;
      v.reason = "left eigenvector at 0 lies in " + v.dual->name();
      break;
    case SeriesBehavior::Divergent:
      v.zero_in_dual_spectrum = Membership::No;
      v.reason = "left eigenvector at 0 is not in " + v.dual->name();
      break;
    case SeriesBehavior::Undetermined:
      v.reason = "membership of the left eigenvector undetermined";
      break;
  }
  return v;
}

SymmetricIntervalReport symmetric_dual_interval_check(int n_max,
                                                      const std::vector<double>& lambdas,
                                                      Lattice lattice) {
  constexpr double p = 0.5;
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  SymmetricIntervalReport report;
  report.lattice = lattice;
  report.n_max = n_max;
  const BandedOp op(lattice, PSeq::constant(p));
  report.symmetric = true;
  const Index lo = lattice == Lattice::HalfLine ? 0 : -32;
  for (Index i = lo; i < 32 && report.symmetric; ++i) {
    for (Index j = std::max(lo, i - 1); j <= i + 1; ++j) {
      if (op.entry(i, j) != op.entry(j, i)) report.symmetric = false;
    }
  }
  for (double lambda : lambdas) {
    SymmetricPoint pt;
    pt.lambda = lambda;
    pt.roots = TransferMatrix::for_walk(p, lambda).eigenvalues();
    auto q = eigen_sequence(p, lambda, n_max);
    if (lattice == Lattice::Line) {
      // Extend to negative indices with the same interior recurrence.
      Complex next = q[0];
      Complex next2 = q[1];
      for (int m = 1; m <= n_max; ++m) {
        const Complex back = (lambda * next - p * next2) / (1.0 - p);
        q.push_back(back);
        next2 = next;
        next = back;
      }
    }
    for (const Complex& z : q) pt.max_abs = std::max(pt.max_abs, std::abs(z));
    const bool unit_circle = std::abs(lambda) < 1.0;
    if (unit_circle) {
      const Complex q1 = (lambda + p - 1.0) / p;
      const Complex d = (q1 - pt.roots[0]) / (pt.roots[1] - pt.roots[0]);
      pt.bound = std::abs(1.0 - d) + std::abs(d);
      pt.bounded = pt.max_abs <= pt.bound * (1.0 + 1e-9);
    }
    if (pt.bounded) ++report.certified;
    report.points.push_back(pt);
  }
  report.not_supercyclic_on_l1 = report.symmetric && report.certified >= 2;
  return report;
}

}  // namespace markovdyn
