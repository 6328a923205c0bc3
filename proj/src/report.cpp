#include "markovdyn/report.hpp"

#include <algorithm>
#include <cmath>

namespace markovdyn {

std::string version() { return MARKOVDYN_VERSION; }

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json number(Complex z) {
  if (z.imag() == 0.0) return number(z.real());
  return Json{{"re", number(z.real())}, {"im", number(z.imag())}};
}

Json numbers(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(number(x));
  return a;
}

namespace {

std::vector<double> head(const std::vector<double>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

}  // namespace

Json coordinates(const FinSeq& x) {
  // Half-line vectors are listed from index 0 so positions read directly.
  const Index first = x.lattice() == Lattice::HalfLine ? 0 : x.offset();
  Json values = Json::array();
  for (Index k = first; k < x.end(); ++k) values.push_back(number(x[k]));
  return Json{{"lattice", to_string(x.lattice())}, {"offset", first}, {"values", values}};
}

Json to_json(const SeriesJudgement& j) {
  return Json{{"behavior", to_string(j.behavior)}, {"rule", j.rule}};
}

Json to_json(const SeriesTrace& t) {
  return Json{{"judgement", to_json(t.judgement)},
              {"terms", numbers(t.terms)},
              {"partial_sums", numbers(t.partial_sums)}};
}

Json to_json(const ClassVerdict& v) {
  return Json{{"verdict", to_string(v.verdict)},
              {"method", v.method},
              {"horizon", v.horizon},
              {"s1", to_json(v.s1)},
              {"s2", to_json(v.s2)}};
}

Json to_json(const Estimate& e) {
  return Json{{"estimate", number(e.estimate)},
              {"stderr", number(e.std_error)},
              {"samples", e.samples},
              {"seed", e.seed}};
}

Json to_json(const InverseResult& r) {
  return Json{{"coordinates", coordinates(r.u)},
              {"tail_certified", r.tail_certified},
              {"tail_bound", number(r.tail_bound)}};
}

Json to_json(const KernelBasis& b) {
  Json vectors = Json::array();
  for (const auto& v : b.vectors) vectors.push_back(coordinates(v));
  return Json{{"order", b.order},
              {"decayed", b.decayed},
              {"computed_window", b.computed_window},
              {"vectors", vectors}};
}

Json to_json(const SpectrumVerdict& v) {
  return Json{{"lambda", number(v.lambda)},
              {"space", v.space.name()},
              {"member", to_string(v.member)},
              {"reason", v.reason},
              {"roots", Json::array({number(v.alpha), number(v.beta)})},
              {"discriminant", number(v.discriminant)},
              {"defective", v.defective},
              {"coef_c", number(v.coef_c)},
              {"coef_d", number(v.coef_d)},
              {"dominant_modulus", number(v.dominant_modulus)},
              {"on_unit_circle_exact", v.on_unit_circle_exact},
              {"max_abs_q", number(v.max_abs_q)},
              {"last_abs_q", number(v.last_abs_q)}};
}

Json to_json(const DualVerdict& v) {
  return Json{{"space", v.space.name()},
              {"dual", v.dual ? Json(v.dual->name()) : Json(nullptr)},
              {"zero_in_dual_spectrum", to_string(v.zero_in_dual_spectrum)},
              {"not_hypercyclic", v.not_hypercyclic},
              {"eigenvector_test", to_json(v.eigenvector_test)},
              {"weight_condition", to_json(v.weight_condition)},
              {"reason", v.reason},
              {"eigenvector_head", numbers(head(v.eigenvector, 20))}};
}

Json to_json(const SymmetricIntervalReport& r) {
  Json points = Json::array();
  for (const auto& pt : r.points) {
    points.push_back(Json{{"lambda", pt.lambda},
                          {"roots", Json::array({number(pt.roots[0]), number(pt.roots[1])})},
                          {"bound", number(pt.bound)},
                          {"max_abs", number(pt.max_abs)},
                          {"bounded", pt.bounded}});
  }
  return Json{{"lattice", to_string(r.lattice)},
              {"n_max", r.n_max},
              {"symmetric", r.symmetric},
              {"certified", r.certified},
              {"not_supercyclic_on_l1", r.not_supercyclic_on_l1},
              {"points", points}};
}

Json to_json(const Certificate& c) {
  Json scalars = Json::object();
  for (const auto& [k, v] : c.scalars) scalars[k] = number(v);
  Json traces = Json::object();
  for (const auto& [k, v] : c.traces) traces[k] = numbers(v);
  return Json{{"property", to_string(c.property)},
              {"holds", to_string(c.holds)},
              {"pseq", c.pseq},
              {"space", c.space},
              {"lambda", number(c.lambda)},
              {"reason", c.reason},
              {"scalars", scalars},
              {"traces", traces}};
}

Json to_json(const OrbitProbeReport& r) {
  Json targets = Json::array();
  for (const auto& t : r.targets) {
    targets.push_back(Json{{"min_distance", number(t.min_distance)},
                           {"argmin", t.argmin},
                           {"distances", numbers(t.distances)}});
  }
  return Json{{"projective", r.projective},
              {"n_max", r.n_max},
              {"targets", targets},
              {"orbit_norms", numbers(r.orbit_norms)},
              {"hit_times", r.hit_times}};
}

}  // namespace markovdyn
