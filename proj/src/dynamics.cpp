#include "markovdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "markovdyn/spectral.hpp"

namespace markovdyn {
namespace {

Certificate start(Property property, const BandedOp& op, const SpaceSpec& space,
                  Complex lambda = 1.0) {
  Certificate c;
  c.property = property;
  c.pseq = op.pseq().to_string();
  c.space = space.name();
  c.lambda = lambda;
  return c;
}

struct Samples {
  std::vector<FinSeq> vectors;
  std::vector<int> orders;
};

// Kernel vectors V_{i,k} for k = 1..max_order. Empty with a reason when the
// construction does not apply.
Samples kernel_samples(const BandedOp& op, int max_order, std::string& reason) {
  Samples s;
  if (op.lattice() != Lattice::HalfLine) {
    reason = "kernel construction needs a half-line walk";
    return s;
  }
  try {
    for (int k = 1; k <= max_order; ++k) {
      const KernelBasis basis = kernel_basis(op, k);
      if (!basis.decayed) {
        reason = "kernel vectors of order " + std::to_string(k) +
                 " did not decay inside the window";
        return {};
      }
      for (const auto& v : basis.vectors) {
        s.vectors.push_back(v);
        s.orders.push_back(k);
      }
    }
  } catch (const std::domain_error& e) {
    reason = std::string("kernel basis unavailable: ") + e.what();
    return {};
  }
  return s;
}

double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

}  // namespace

std::string_view to_string(Property p) {
  switch (p) {
    case Property::SupercyclicityCriterion: return "SupercyclicityCriterion";
    case Property::FhcChaos: return "FHC_Chaos";
    case Property::NotHypercyclicLowerBound: return "NotHypercyclic_LowerBound";
    case Property::NotSupercyclicObstruction: return "NotSupercyclic_Obstruction";
  }
  return "?";
}

std::string_view to_string(Holds h) {
  switch (h) {
    case Holds::Yes: return "yes";
    case Holds::No: return "no";
    case Holds::Undetermined: return "undetermined";
  }
  return "?";
}

Certificate fhc_chaos_certificate(const BandedOp& op, Complex lambda, const SpaceSpec& space,
                                  const CertificateOptions& opt) {
  Certificate c = start(Property::FhcChaos, op, space, lambda);
  if (lambda == Complex{}) {
    c.reason = "lambda must be nonzero";
    return c;
  }
  const Samples samples = kernel_samples(op, opt.max_kernel_order, c.reason);
  if (samples.vectors.empty()) return c;

  const double bound = right_inverse_norm_bound(op, space);
  if (!std::isfinite(bound)) {
    c.reason = "right inverse has no geometric norm bound";
    return c;
  }
  const double abs_lambda = std::abs(lambda);
  const double rho = bound / abs_lambda;
  c.scalars["norm_bound_S"] = bound;
  c.scalars["geometric_ratio"] = rho;
  c.scalars["lambda_threshold"] = bound;
  if (const auto p = op.pseq().constant_value()) {
    c.scalars["analytic_norm_bound_S"] = 1.0 / (2.0 * *p - 1.0);
  } else {
    c.scalars["sup_tail_ratio_r"] = op.pseq().sup_ratio_from(op.pseq().regular_from());
  }

  bool vanish_ok = true;
  bool decay_ok = true;
  bool inverse_ok = true;
  std::vector<double> kernel_residuals;
  std::vector<double> inverse_residuals;
  std::vector<double> decay_slack;
  std::vector<double> observed_ratios;
  for (std::size_t s = 0; s < samples.vectors.size(); ++s) {
    const FinSeq& x = samples.vectors[s];
    const int k = samples.orders[s];
    const double x_norm = norm(x, space);

    // (a) the orbit of lambda A is eventually zero: sum (lambda A)^m x is finite.
    const double residual = sup_norm(op.power_apply(k, x)) / sup_norm(x);
    kernel_residuals.push_back(residual);
    if (!(residual <= opt.vanish_tol)) vanish_ok = false;

    // (c) A S x = x.
    const FinSeq sx = right_inverse(op, x);
    const double inv_res = sup_norm(op.apply(sx) - x);
    inverse_residuals.push_back(inv_res);
    if (!(inv_res <= opt.tol.slack(sup_norm(x)))) inverse_ok = false;

    // (b) |(lambda^{-1} S)^m x| <= rho^m |x|.
    FinSeq z = x;
    double prev = x_norm;
    for (int m = 1; m <= opt.n_max; ++m) {
      z = right_inverse(op, z);
      z *= 1.0 / lambda;
      const double zn = norm(z, space);
      const double allowed = std::pow(rho, m) * x_norm;
      if (s == 0) {
        c.traces["orbit_norms_inverse"].push_back(zn);
        c.traces["orbit_bound_inverse"].push_back(allowed);
        observed_ratios.push_back(prev > 0.0 ? zn / prev : 0.0);
      }
      decay_slack.push_back(allowed - zn);
      if (!(zn <= allowed * (1.0 + 1e-10) + opt.tol.abs * 1e-6)) decay_ok = false;
      prev = zn;
    }
  }
  c.traces["kernel_residuals"] = kernel_residuals;
  c.traces["inverse_residuals"] = inverse_residuals;
  c.traces["observed_step_ratios"] = observed_ratios;
  c.scalars["samples"] = static_cast<double>(samples.vectors.size());
  c.scalars["max_kernel_residual"] = max_of(kernel_residuals);
  c.scalars["max_inverse_residual"] = max_of(inverse_residuals);
  c.scalars["min_decay_slack"] =
      decay_slack.empty() ? 0.0 : *std::min_element(decay_slack.begin(), decay_slack.end());

  if (!vanish_ok || !inverse_ok) {
    c.holds = Holds::Undetermined;
    c.reason = !vanish_ok ? "kernel vectors not annihilated within tolerance"
                          : "A S x = x failed within tolerance";
  } else if (!(rho < 1.0)) {
    c.holds = Holds::No;
    c.reason = "geometric ratio |S|/|lambda| >= 1; criterion not satisfied by this bound";
  } else if (!decay_ok) {
    c.holds = Holds::No;
    c.reason = "orbit of lambda^{-1} S exceeded the geometric bound";
  } else {
    c.holds = Holds::Yes;
    c.reason = "criterion hypotheses verified on kernel samples";
  }
  return c;
}

Certificate supercyclicity_criterion_certificate(const BandedOp& op, const SpaceSpec& space,
                                                 const CertificateOptions& opt) {
  Certificate c = start(Property::SupercyclicityCriterion, op, space);
  if (op.lattice() != Lattice::HalfLine) {
    c.reason = "criterion check needs a half-line walk";
    return c;
  }
  if (const auto p = op.pseq().constant_value()) {
    if (*p <= 0.5) {
      c.reason = "p <= 1/2: the point spectrum is empty and the kernel is trivial";
      return c;
    }
  } else {
    // Eigenvector at 0 has |u_n| = w_n; it must lie in the space.
    if (space.kind() != SpaceSpec::Kind::C0 && space.kind() != SpaceSpec::Kind::Lq) {
      c.reason = "weight condition only stated for c0 and lq";
      return c;
    }
    auto w = weight_sequence(op.pseq(), 4000);
    const double q = space.kind() == SpaceSpec::Kind::Lq ? space.q() : 1.0;
    for (double& x : w) x = std::pow(x, q);
    const SeriesJudgement j = judge_series(pair_blocks(w));
    c.scalars["weight_condition_convergent"] =
        j.behavior == SeriesBehavior::Convergent ? 1.0 : 0.0;
    if (j.behavior != SeriesBehavior::Convergent) {
      c.reason = "weight condition on w_n not confirmed (" + j.rule + ")";
      return c;
    }
  }
  const Samples samples = kernel_samples(op, opt.max_kernel_order, c.reason);
  if (samples.vectors.empty()) return c;

  bool vanish_ok = true;
  bool identity_ok = true;
  std::vector<double> residuals;
  std::vector<double> relative;
  for (std::size_t s = 0; s < samples.vectors.size(); ++s) {
    const FinSeq& x = samples.vectors[s];
    const FinSeq& y = samples.vectors[(s + 1) % samples.vectors.size()];
    const double x_sup = sup_norm(x);
    FinSeq ax = x;
    FinSeq sy = y;
    for (int n = 1; n <= opt.n_max; ++n) {
      ax = op.apply(ax);
      sy = right_inverse(op, sy);
      const double ax_norm = norm(ax, space);
      const double sy_norm = norm(sy, space);
      if (n >= samples.orders[s] && !(sup_norm(ax) <= opt.vanish_tol * x_sup)) {
        vanish_ok = false;
      }
      const FinSeq back = op.power_apply(n, sy);
      const double res = sup_norm(back - y);
      const double scale = std::max(sup_norm(y), sup_norm(sy));
      if (!(res <= opt.tol.abs + 1e-12 * scale)) identity_ok = false;
      residuals.push_back(res);
      relative.push_back(res / scale);
      if (s == 0) {
        c.traces["norm_An_x"].push_back(ax_norm);
        c.traces["norm_Sn_y"].push_back(sy_norm);
        c.traces["product"].push_back(ax_norm * sy_norm);
        c.traces["identity_residual"].push_back(res);
      }
    }
  }
  c.scalars["samples"] = static_cast<double>(samples.vectors.size());
  c.scalars["max_identity_residual"] = max_of(residuals);
  // Relative to max(|y|, |S^n y|): S^n y grows like |S|^n.
  c.scalars["max_relative_identity_residual"] = max_of(relative);
  if (!vanish_ok) {
    c.holds = Holds::Undetermined;
    c.reason = "A^n x did not vanish within tolerance";
  } else if (!identity_ok) {
    c.holds = Holds::Undetermined;
    c.reason = "A^n S^n y = y failed within tolerance";
  } else {
    c.holds = Holds::Yes;
    c.reason = "A^n x vanishes eventually and A^n S^n y = y on kernel samples";
  }
  return c;
}

Certificate c_space_obstruction(const BandedOp& op, Complex alpha, const FinSeq& perturbation,
                                Index i_probe, int n_max, double convergence_tol) {
  Certificate c = start(Property::NotSupercyclicObstruction, op, SpaceSpec::c(), alpha);
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  const ClassVerdict cls = op.lattice() == Lattice::HalfLine ? classify(op.pseq())
                                                             : classify_line(op.pseq());
  const double abs_alpha = std::abs(alpha);
  auto shifted_sup = [&](const FinSeq& z) {
    double m = abs_alpha;
    for (Complex e : z.entries()) m = std::max(m, std::abs(alpha + e));
    return m;
  };
  const double y_sup = shifted_sup(perturbation);
  const double ratio_bound = abs_alpha / y_sup;
  c.scalars["alpha_abs"] = abs_alpha;
  c.scalars["y_sup"] = y_sup;
  c.scalars["ratio_lower_bound"] = ratio_bound;

  FinSeq z = perturbation;
  bool ratio_every_n = true;
  double min_ratio = 1.0;
  double deviation = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    z = op.apply(z);
    const Complex value = alpha + z[i_probe];
    deviation = std::abs(value - alpha);
    const double ratio = std::abs(value) / shifted_sup(z);
    min_ratio = std::min(min_ratio, ratio);
    if (ratio < ratio_bound * (1.0 - 1e-12)) ratio_every_n = false;
    c.traces["value_re"].push_back(value.real());
    c.traces["deviation"].push_back(deviation);
    c.traces["ratio"].push_back(ratio);
  }
  c.scalars["final_deviation"] = deviation;
  c.scalars["min_ratio"] = min_ratio;
  c.scalars["ratio_bound_every_n"] = ratio_every_n ? 1.0 : 0.0;
  const std::string cls_name(to_string(cls.verdict));
  if (abs_alpha == 0.0) {
    c.reason = "alpha = 0: y lies in c0, which is invariant";
  } else if (cls.verdict == Recurrence::PositiveRecurrent) {
    c.reason = "classification " + cls_name +
               ": convergence to alpha is only asserted for transient or null recurrent chains";
  } else if (deviation < convergence_tol && ratio_every_n) {
    c.holds = Holds::Yes;
    c.reason = "classification " + cls_name +
               ": (A^n y)_i -> alpha and the projective ratio stays above |alpha|/|y|";
  } else {
    c.holds = Holds::No;
    c.reason = "classification " + cls_name + ": convergence or ratio bound not observed";
  }
  return c;
}

Certificate line_walk_lower_bound(const BandedOp& op, const FinSeq& x, int n,
                                  const SpaceSpec& space, const Tolerance& tol) {
  if (op.lattice() != Lattice::Line) {
    throw std::invalid_argument("lower bound applies to the walk on the line");
  }
  const auto p = op.pseq().constant_value();
  if (!p) throw std::invalid_argument("lower bound needs a constant p");
  if (*p == 0.5) throw std::invalid_argument("p = 1/2 makes the lower bound vacuous");
  if (n < 0) throw std::invalid_argument("negative power");
  Certificate c = start(Property::NotHypercyclicLowerBound, op, space);
  const double factor = std::abs(1.0 - 2.0 * *p);
  const double x_norm = norm(x, space);
  FinSeq y = x;
  bool ok = true;
  double min_slack = 0.0;
  for (int m = 0; m <= n; ++m) {
    if (m > 0) y = op.apply(y);
    const double lhs = norm(y, space);
    const double rhs = std::pow(factor, m) * x_norm;
    c.traces["norm"].push_back(lhs);
    c.traces["bound"].push_back(rhs);
    const double slack = lhs - rhs;
    min_slack = m == 0 ? slack : std::min(min_slack, slack);
    if (!(lhs >= rhs * (1.0 - 1e-10) - tol.abs * 1e-6)) ok = false;
  }
  c.scalars["norm"] = c.traces["norm"].back();
  c.scalars["bound"] = c.traces["bound"].back();
  c.scalars["min_slack"] = min_slack;
  c.scalars["contraction_factor"] = factor;
  c.scalars["lambda_threshold"] = 1.0 / factor;
  c.holds = ok ? Holds::Yes : Holds::No;
  c.reason = ok ? "lower bound |A^m x| >= |1-2p|^m |x| verified for m <= n; lambda A is "
                  "not hypercyclic for |lambda| >= 1/|1-2p|"
                : "lower bound violated";
  return c;
}

OrbitProbeReport orbit_density_probe(const BandedOp& op, const FinSeq& x,
                                     const std::vector<FinSeq>& targets, const SpaceSpec& space,
                                     int n_max, bool projective, double epsilon) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  OrbitProbeReport report;
  report.projective = projective;
  report.n_max = n_max;
  struct Prepared {
    FinSeq unit;
    Index anchor = 0;
  };
  std::vector<Prepared> prepared;
  for (const auto& t : targets) {
    Prepared pr{t, t.offset()};
    if (projective) {
      const double tn = norm(t, space);
      if (tn > 0.0) pr.unit *= 1.0 / tn;
    }
    double best = -1.0;
    for (Index k = t.offset(); k < t.end(); ++k) {
      if (std::abs(t[k]) > best) {
        best = std::abs(t[k]);
        pr.anchor = k;
      }
    }
    prepared.push_back(std::move(pr));
  }
  report.targets.resize(targets.size());
  FinSeq y = x;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) y = op.apply(y);
    const double yn = norm(y, space);
    report.orbit_norms.push_back(yn);
    for (std::size_t t = 0; t < prepared.size(); ++t) {
      double d = 0.0;
      if (projective) {
        FinSeq unit = y;
        if (yn > 0.0) unit *= 1.0 / yn;
        const Complex a = unit[prepared[t].anchor];
        const Complex b = prepared[t].unit[prepared[t].anchor];
        if (a != Complex{} && b != Complex{}) {
          unit *= (std::conj(a) / std::abs(a)) * (b / std::abs(b));
        }
        d = norm(unit - prepared[t].unit, space);
      } else {
        d = norm(y - prepared[t].unit, space);
      }
      auto& td = report.targets[t];
      td.distances.push_back(d);
      if (n == 0 || d < td.min_distance) {
        td.min_distance = d;
        td.argmin = n;
      }
      if (t == 0 && n >= 1 && d < epsilon) report.hit_times.push_back(n);
    }
  }
  return report;
}

double lower_density_estimate(const std::vector<int>& hit_times, int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  std::vector<char> hit(static_cast<std::size_t>(horizon) + 1, 0);
  for (int h : hit_times) {
    if (h < 1 || h > horizon) throw std::invalid_argument("hit time outside [1, horizon]");
    hit[static_cast<std::size_t>(h)] = 1;
  }
  const int from = (horizon + 1) / 2;
  double count = 0.0;
  double best = 1.0;
  for (int n = 1; n <= horizon; ++n) {
    count += hit[static_cast<std::size_t>(n)];
    if (n >= from) best = std::min(best, count / n);
  }
  return best;
}

const std::vector<Scenario>& open_question_scenarios() {
  static const std::vector<Scenario> scenarios = {
      {"srw-half-c0", "Is W_p with p = 1/2 not supercyclic on c0?", "const:0.5", "c0"},
      {"srw-half-l2", "Is W_p with p = 1/2 not supercyclic on lq, q > 1?", "const:0.5", "l2"},
      {"line-walk", "Can the line walk be supercyclic, and is lambda W not hypercyclic for "
                    "all |lambda| >= 1?",
       "const:0.7", "c0", Lattice::Line},
      {"transient-not-supercyclic",
       "Is there a transient chain that is not supercyclic (here sum w_n diverges)?",
       "periodic:0.9,0.45", "l1"},
      {"null-recurrent-l1", "Is there a null recurrent chain that is supercyclic on l1?",
       "periodic:0.6,0.4", "l1"},
  };
  return scenarios;
}

}  // namespace markovdyn
