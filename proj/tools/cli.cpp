#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "markovdyn/report.hpp"

namespace markovdyn::cli {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& t) {
  std::size_t pos = 0;
  const double v = std::stod(t, &pos);
  if (pos != t.size() || !std::isfinite(v)) {
    throw std::invalid_argument("not a finite number: '" + t + "'");
  }
  return v;
}

double signed_unit_or_number(const std::string& t) {
  if (t.empty() || t == "+") return 1.0;
  if (t == "-") return -1.0;
  return to_double(t);
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

// Everything a subcommand may read. Unused fields keep their defaults.
struct RunConfig {
  std::string subcommand;
  std::string mode;
  std::string lattice;
  std::string pseq;
  std::string space = "c0";
  std::string lambda;
  std::string alpha = "1";
  std::string v;
  std::vector<std::string> targets;
  std::string hits;
  std::string name;
  int n_max = -1;
  int horizon = -1;
  int power = 1;
  int order = 1;
  int max_kernel_order = 3;
  int steps = -1;
  double re_min = NAN, re_max = NAN, im_min = 0.0, im_max = 0.0;
  int n = 1;
  Index i = 0, j = 0, probe = 0;
  Index window = 4000;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  double epsilon = 0.1;
  bool projective = false;
  std::string format = "json";
  Tolerance tol = Tolerance::from_env();
};

Json config_json(const RunConfig& c, const std::vector<std::string>& argv) {
  return Json{{"argv", argv},
              {"subcommand", c.subcommand},
              {"mode", c.mode},
              {"lattice", c.lattice},
              {"pseq", c.pseq},
              {"space", c.space},
              {"lambda", c.lambda},
              {"n_max", c.n_max},
              {"horizon", c.horizon},
              {"seed", c.seed},
              {"samples", c.samples},
              {"format", c.format}};
}

struct Output {
  Json result = Json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Lattice lattice_or(const RunConfig& c, Lattice fallback) {
  return c.lattice.empty() ? fallback : parse_lattice(c.lattice);
}

PSeq require_pseq(const RunConfig& c) {
  if (c.pseq.empty()) throw std::invalid_argument("--pseq is required");
  return PSeq::parse(c.pseq);
}

double require_constant(const PSeq& pseq) {
  const auto p = pseq.constant_value();
  if (!p) throw std::invalid_argument("this mode needs a constant p-sequence");
  return *p;
}

Complex require_lambda(const RunConfig& c) {
  if (c.lambda.empty()) throw std::invalid_argument("--lambda is required");
  return parse_complex(c.lambda);
}

int value_or(int v, int fallback) { return v < 0 ? fallback : v; }

void add_coordinate_rows(Output& out, const FinSeq& x, const std::string& prefix = "") {
  const Index first = x.lattice() == Lattice::HalfLine ? 0 : x.offset();
  for (Index k = first; k < x.end(); ++k) {
    std::vector<std::string> row;
    if (!prefix.empty()) row.push_back(prefix);
    row.push_back(std::to_string(k));
    row.push_back(fmt(x[k].real()));
    row.push_back(fmt(x[k].imag()));
    out.rows.push_back(std::move(row));
  }
}

Output run_classify(const RunConfig& c) {
  const PSeq pseq = require_pseq(c);
  const Lattice lattice = lattice_or(c, Lattice::HalfLine);
  const ClassVerdict v = lattice == Lattice::HalfLine
                             ? classify(pseq, value_or(c.horizon, static_cast<int>(kDefaultHorizon)))
                             : classify_line(pseq);
  Output out;
  out.result = to_json(v);
  out.header = {"n", "s1_term", "s1_partial", "s2_term", "s2_partial"};
  for (std::size_t k = 0; k < v.s1.terms.size(); ++k) {
    out.rows.push_back({std::to_string(k + 1), fmt(v.s1.terms[k]), fmt(v.s1.partial_sums[k]),
                        k < v.s2.terms.size() ? fmt(v.s2.terms[k]) : "",
                        k < v.s2.partial_sums.size() ? fmt(v.s2.partial_sums[k]) : ""});
  }
  return out;
}

std::vector<Complex> lambda_grid(const RunConfig& c, double re_lo, double re_hi, int steps) {
  const double lo = std::isnan(c.re_min) ? re_lo : c.re_min;
  const double hi = std::isnan(c.re_max) ? re_hi : c.re_max;
  const int n = value_or(c.steps, steps);
  if (n < 1) throw std::invalid_argument("--steps must be positive");
  std::vector<Complex> grid;
  const int n_im = c.im_min == c.im_max ? 1 : n;
  for (int a = 0; a < n; ++a) {
    const double re = n == 1 ? lo : lo + (hi - lo) * a / (n - 1);
    for (int b = 0; b < n_im; ++b) {
      const double im = n_im == 1 ? c.im_min : c.im_min + (c.im_max - c.im_min) * b / (n_im - 1);
      grid.emplace_back(re, im);
    }
  }
  return grid;
}

Output run_spectrum(const RunConfig& c) {
  Output out;
  const std::string mode = c.mode.empty() ? "point" : c.mode;
  const SpaceSpec space = SpaceSpec::parse(c.space);
  if (mode == "point" || mode == "grid") {
    const double p = require_constant(require_pseq(c));
    std::vector<Complex> lambdas;
    if (mode == "point") {
      lambdas.push_back(require_lambda(c));
    } else {
      lambdas = lambda_grid(c, -2.0, 2.0, 41);
    }
    out.header = {"lambda_re", "lambda_im", "member", "dominant_modulus", "det_minus_expected"};
    Json rows = Json::array();
    std::map<std::string, int> counts;
    for (Complex lambda : lambdas) {
      const SpectrumVerdict v = point_spectrum_probe(p, lambda, space);
      const double det_err =
          std::abs(TransferMatrix::for_walk(p, lambda).det() - Complex((1.0 - p) / p));
      ++counts[std::string(to_string(v.member))];
      out.rows.push_back({fmt(lambda.real()), fmt(lambda.imag()), std::string(to_string(v.member)),
                          fmt(v.dominant_modulus), fmt(det_err)});
      rows.push_back(to_json(v));
    }
    out.result = mode == "point" ? rows.front() : Json{{"counts", counts}, {"points", rows}};
  } else if (mode == "disk") {
    const double p = require_constant(require_pseq(c));
    const double r = certified_disk_radius(p, space);
    out.result = Json{{"p", p}, {"space", space.name()}, {"certified_radius", r}};
    out.header = {"p", "space", "certified_radius"};
    out.rows.push_back({fmt(p), space.name(), fmt(r)});
  } else if (mode == "dual") {
    const DualVerdict v = dual_zero_obstruction(require_pseq(c), space, value_or(c.n_max, 2000));
    out.result = to_json(v);
    out.header = {"n", "u_n"};
    for (std::size_t k = 0; k < v.eigenvector.size(); ++k) {
      out.rows.push_back({std::to_string(k), fmt(v.eigenvector[k])});
    }
  } else if (mode == "symmetric") {
    std::vector<double> lambdas;
    for (Complex z : lambda_grid(c, -0.95, 0.95, 39)) lambdas.push_back(z.real());
    const auto r = symmetric_dual_interval_check(value_or(c.n_max, 2000), lambdas,
                                                 lattice_or(c, Lattice::HalfLine));
    out.result = to_json(r);
    out.header = {"lambda", "bound", "max_abs", "bounded"};
    for (const auto& pt : r.points) {
      out.rows.push_back({fmt(pt.lambda), fmt(pt.bound), fmt(pt.max_abs), pt.bounded ? "1" : "0"});
    }
  } else if (mode == "g0") {
    const PSeq pseq = require_pseq(c);
    const int n_max = value_or(c.n_max, 40);
    const auto u = g_zero_eigenvector(pseq, n_max);
    Json w = Json::array();
    out.header = {"n", "u_n", "w_n"};
    for (int k = 0; k <= n_max; ++k) {
      const double wk = k == 0 ? 1.0 : weight_w(pseq, k);
      w.push_back(number(wk));
      out.rows.push_back({std::to_string(k), fmt(u[static_cast<std::size_t>(k)]), fmt(wk)});
    }
    out.result = Json{{"eigenvector", numbers(u)}, {"weights", w}};
  } else {
    throw std::invalid_argument("unknown spectrum mode '" + mode + "'");
  }
  return out;
}

Output run_inverse(const RunConfig& c) {
  const BandedOp op(lattice_or(c, Lattice::HalfLine), require_pseq(c));
  if (c.v.empty()) throw std::invalid_argument("--v is required");
  if (c.power < 0) throw std::invalid_argument("--power must be non-negative");
  const FinSeq v = parse_vector(c.v, op.lattice());
  InverseResult r;
  r.u = v;
  r.tail_certified = true;
  for (int k = 0; k < c.power; ++k) r = right_inverse_detailed(op, r.u);
  Output out;
  out.result = to_json(r);
  out.result["power"] = c.power;
  out.result["identity_residual"] = number(sup_norm(op.power_apply(c.power, r.u) - v));
  out.header = {"index", "re", "im"};
  add_coordinate_rows(out, r.u);
  return out;
}

Output run_kernel(const RunConfig& c) {
  const BandedOp op(lattice_or(c, Lattice::HalfLine), require_pseq(c));
  const KernelBasis b = kernel_basis(op, c.order, c.window);
  Output out;
  out.result = to_json(b);
  Json residuals = Json::array();
  for (const auto& v : b.vectors) residuals.push_back(number(sup_norm(op.power_apply(c.order, v))));
  out.result["residuals"] = residuals;
  out.header = {"vector", "index", "re", "im"};
  for (std::size_t k = 0; k < b.vectors.size(); ++k) {
    add_coordinate_rows(out, b.vectors[k], std::to_string(k));
  }
  return out;
}

void certificate_rows(Output& out, const Certificate& cert) {
  out.header = {"kind", "name", "n", "value"};
  for (const auto& [k, v] : cert.scalars) out.rows.push_back({"scalar", k, "", fmt(v)});
  for (const auto& [k, trace] : cert.traces) {
    for (std::size_t n = 0; n < trace.size(); ++n) {
      out.rows.push_back({"trace", k, std::to_string(n), fmt(trace[n])});
    }
  }
}

Output run_certify(const RunConfig& c) {
  const std::string& kind = c.mode;
  const PSeq pseq = require_pseq(c);
  const SpaceSpec space = SpaceSpec::parse(c.space);
  CertificateOptions opt;
  opt.tol = c.tol;
  opt.max_kernel_order = c.max_kernel_order;
  opt.n_max = value_or(c.n_max, opt.n_max);
  Certificate cert;
  if (kind == "fhc") {
    const BandedOp op(lattice_or(c, Lattice::HalfLine), pseq);
    cert = fhc_chaos_certificate(op, require_lambda(c), space, opt);
  } else if (kind == "supercyclic") {
    const BandedOp op(lattice_or(c, Lattice::HalfLine), pseq);
    cert = supercyclicity_criterion_certificate(op, space, opt);
  } else if (kind == "obstruction") {
    const BandedOp op(lattice_or(c, Lattice::HalfLine), pseq);
    const FinSeq z = c.v.empty() ? FinSeq::unit(op.lattice(), 0) : parse_vector(c.v, op.lattice());
    cert = c_space_obstruction(op, parse_complex(c.alpha), z, c.probe, value_or(c.n_max, 200));
  } else if (kind == "line-bound") {
    if (lattice_or(c, Lattice::Line) != Lattice::Line) {
      throw std::invalid_argument("line-bound contradicts --lattice half");
    }
    const BandedOp op(Lattice::Line, pseq);
    const FinSeq x = c.v.empty() ? FinSeq::unit(Lattice::Line, 0) : parse_vector(c.v, Lattice::Line);
    cert = line_walk_lower_bound(op, x, value_or(c.n_max, 20), space, c.tol);
  } else {
    throw std::invalid_argument("unknown certificate '" + kind + "'");
  }
  Output out;
  out.result = to_json(cert);
  certificate_rows(out, cert);
  return out;
}

std::vector<int> parse_hits(const std::string& text) {
  std::vector<int> hits;
  if (trim(text).empty()) return hits;
  for (const auto& part : split(text, ',')) {
    std::size_t pos = 0;
    const int h = std::stoi(part, &pos);
    if (pos != part.size()) throw std::invalid_argument("bad hit time '" + part + "'");
    hits.push_back(h);
  }
  return hits;
}

Json probe_summary(const OrbitProbeReport& r, bool with_traces) {
  Json j = to_json(r);
  if (!with_traces) {
    for (auto& t : j["targets"]) t.erase("distances");
    j.erase("orbit_norms");
  }
  return j;
}

Output run_probe(const RunConfig& c) {
  Output out;
  if (c.mode == "lower-density") {
    const int horizon = value_or(c.horizon, 0);
    const double d = lower_density_estimate(parse_hits(c.hits), horizon);
    out.result = Json{{"horizon", horizon}, {"lower_density", d}};
    out.header = {"horizon", "lower_density"};
    out.rows.push_back({std::to_string(horizon), fmt(d)});
    return out;
  }
  if (c.mode != "scenarios") throw std::invalid_argument("unknown probe '" + c.mode + "'");
  const int n_max = value_or(c.n_max, 200);
  Json list = Json::array();
  out.header = {"scenario", "target", "min_distance", "argmin"};
  bool found = false;
  for (const auto& s : open_question_scenarios()) {
    if (!c.name.empty() && c.name != s.name) continue;
    found = true;
    const BandedOp op(s.lattice, PSeq::parse(s.pseq));
    const SpaceSpec space = SpaceSpec::parse(s.space);
    const FinSeq x(s.lattice, 0, {1.0, 0.5, 0.25});
    const std::vector<FinSeq> targets = {FinSeq::unit(s.lattice, 0), FinSeq::unit(s.lattice, 1),
                                         FinSeq(s.lattice, 0, {1.0, -1.0})};
    const auto report = orbit_density_probe(op, x, targets, space, n_max, true, c.epsilon);
    const ClassVerdict cls =
        s.lattice == Lattice::HalfLine ? classify(op.pseq()) : classify_line(op.pseq());
    list.push_back(Json{{"name", s.name},
                        {"question", s.question},
                        {"pseq", s.pseq},
                        {"space", s.space},
                        {"lattice", to_string(s.lattice)},
                        {"classification", to_string(cls.verdict)},
                        {"verdict", nullptr},
                        {"probe", probe_summary(report, false)},
                        {"lower_density_first_target",
                         n_max >= 1 ? number(lower_density_estimate(report.hit_times, n_max))
                                    : Json(nullptr)}});
    for (std::size_t t = 0; t < report.targets.size(); ++t) {
      out.rows.push_back({s.name, std::to_string(t), fmt(report.targets[t].min_distance),
                          std::to_string(report.targets[t].argmin)});
    }
  }
  if (!found) throw std::invalid_argument("unknown scenario '" + c.name + "'");
  out.result = Json{{"note", "probes report evidence only; no verdict is drawn"},
                    {"scenarios", list}};
  return out;
}

Output run_oracle(const RunConfig& c) {
  WalkConfig cfg;
  cfg.lattice = lattice_or(c, Lattice::HalfLine);
  cfg.pseq = require_pseq(c);
  cfg.seed = c.seed;
  cfg.samples = c.samples;
  const BandedOp op(cfg.lattice, cfg.pseq);
  Estimate e;
  double exact = 0.0;
  if (c.mode.empty() || c.mode == "transition") {
    e = estimate_transition(cfg, c.n, c.i, c.j);
    exact = op.power_entry(c.n, c.i, c.j);
  } else if (c.mode == "return") {
    const int horizon = value_or(c.horizon, 100);
    e = estimate_return_mass(cfg, horizon, c.i);
    exact = exact_return_mass(op, horizon, c.i);
  } else {
    throw std::invalid_argument("unknown oracle mode '" + c.mode + "'");
  }
  Output out;
  out.result = to_json(e);
  out.result["exact"] = number(exact);
  out.header = {"estimate", "stderr", "samples", "seed", "exact"};
  out.rows.push_back({fmt(e.estimate), fmt(e.std_error), std::to_string(e.samples),
                      std::to_string(e.seed), fmt(exact)});
  return out;
}

Output run_orbit(const RunConfig& c) {
  const BandedOp op(lattice_or(c, Lattice::HalfLine), require_pseq(c));
  if (c.v.empty()) throw std::invalid_argument("--v is required");
  if (c.targets.empty()) throw std::invalid_argument("at least one --target is required");
  const FinSeq x = parse_vector(c.v, op.lattice());
  std::vector<FinSeq> targets;
  for (const auto& t : c.targets) targets.push_back(parse_vector(t, op.lattice()));
  const int n_max = value_or(c.n_max, 100);
  const auto report = orbit_density_probe(op, x, targets, SpaceSpec::parse(c.space), n_max,
                                          c.projective, c.epsilon);
  Output out;
  out.result = to_json(report);
  if (n_max >= 1) out.result["lower_density"] = lower_density_estimate(report.hit_times, n_max);
  out.header = {"n", "target", "distance"};
  for (std::size_t t = 0; t < report.targets.size(); ++t) {
    const auto& d = report.targets[t].distances;
    for (std::size_t n = 0; n < d.size(); ++n) {
      out.rows.push_back({std::to_string(n), std::to_string(t), fmt(d[n])});
    }
  }
  return out;
}

void emit(const Output& o, const RunConfig& c, const std::vector<std::string>& argv,
          std::ostream& out) {
  if (c.format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << cells[k];
      out << '\n';
    };
    line(o.header);
    for (const auto& r : o.rows) line(r);
    return;
  }
  const Json report{{"tool", "markovdyn-cli"},
                    {"version", version()},
                    {"schema", kSchemaVersion},
                    {"config", config_json(c, argv)},
                    {"tolerances", {{"abs", c.tol.abs}, {"rel", c.tol.rel}}},
                    {"result", o.result}};
  out << report.dump(2) << '\n';
}

int replay(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open " << path << '\n';
    return kInvalidInput;
  }
  std::vector<std::string> argv;
  try {
    argv = Json::parse(in).at("config").at("argv").get<std::vector<std::string>>();
  } catch (const std::exception& e) {
    err << "error: not a report: " << e.what() << '\n';
    return kInvalidInput;
  }
  if (!argv.empty() && argv.front() == "--replay") {
    err << "error: nested replay\n";
    return kInvalidInput;
  }
  return run(argv, out, err);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  if (s.back() != 'i') return to_double(s);
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split_at = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  if (split_at == std::string::npos) return {0.0, signed_unit_or_number(body)};
  return {to_double(body.substr(0, split_at)), signed_unit_or_number(body.substr(split_at))};
}

FinSeq parse_vector(std::string_view text, Lattice lattice) {
  const std::string s = trim(text);
  if (s.size() >= 2 && s[0] == 'e') {
    std::size_t pos = 0;
    const long long i = std::stoll(s.substr(1), &pos);
    if (pos != s.size() - 1) throw std::invalid_argument("bad unit vector '" + s + "'");
    return FinSeq::unit(lattice, i);
  }
  Index offset = 0;
  std::string list = s;
  if (const auto at = s.find('@'); at != std::string::npos) {
    std::size_t pos = 0;
    const std::string off = trim(s.substr(at + 1));
    offset = std::stoll(off, &pos);
    if (pos != off.size()) throw std::invalid_argument("bad offset '" + off + "'");
    list = s.substr(0, at);
  }
  std::vector<Complex> values;
  for (const auto& part : split(list, ',')) values.push_back(parse_complex(part));
  return FinSeq(lattice, offset, std::move(values));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.size() == 2 && args[0] == "--replay") return replay(args[1], out, err);

  RunConfig c;
  CLI::App app{"Linear dynamics of Markov transition operators on sequence spaces",
               "markovdyn-cli"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1, 1);
  app.footer("Use --replay REPORT.json alone to re-run the configuration stored in a report.");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tol", c.tol.abs, "Absolute tolerance (default from MARKOVDYN_TOL)");
  };
  auto walk = [&](CLI::App* sub) {
    sub->add_option("--pseq", c.pseq, "p-sequence: const:P, list:A,B;tail=T, periodic:A,B");
    sub->add_option("--lattice", c.lattice, "half or line");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Recurrence classification");
  walk(classify_cmd);
  classify_cmd->add_option("--horizon", c.horizon, "Series horizon");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Point-spectrum probes");
  walk(spectrum_cmd);
  spectrum_cmd->add_option("mode", c.mode, "point, grid, disk, dual, symmetric or g0");
  spectrum_cmd->add_option("--space", c.space);
  spectrum_cmd->add_option("--lambda", c.lambda);
  spectrum_cmd->add_option("--n-max", c.n_max);
  spectrum_cmd->add_option("--re-min", c.re_min);
  spectrum_cmd->add_option("--re-max", c.re_max);
  spectrum_cmd->add_option("--im-min", c.im_min);
  spectrum_cmd->add_option("--im-max", c.im_max);
  spectrum_cmd->add_option("--steps", c.steps);

  auto* inverse_cmd = app.add_subcommand("inverse", "Right inverse S^k v");
  walk(inverse_cmd);
  inverse_cmd->add_option("--v", c.v, "Vector literal: e0 or 1,2,3@offset");
  inverse_cmd->add_option("--power", c.power);

  auto* kernel_cmd = app.add_subcommand("kernel", "Kernel basis of A^n");
  walk(kernel_cmd);
  kernel_cmd->add_option("--order", c.order);
  kernel_cmd->add_option("--window", c.window);

  auto* certify_cmd = app.add_subcommand("certify", "Certificates and obstructions");
  walk(certify_cmd);
  certify_cmd->add_option("kind", c.mode, "fhc, supercyclic, obstruction or line-bound")
      ->required();
  certify_cmd->add_option("--space", c.space);
  certify_cmd->add_option("--lambda", c.lambda);
  certify_cmd->add_option("--alpha", c.alpha);
  certify_cmd->add_option("--v", c.v);
  certify_cmd->add_option("--probe", c.probe);
  certify_cmd->add_option("--n-max", c.n_max);
  certify_cmd->add_option("--max-kernel-order", c.max_kernel_order);

  auto* probe_cmd = app.add_subcommand("probe", "Open-question scenarios and density estimates");
  probe_cmd->add_option("kind", c.mode, "scenarios or lower-density")->required();
  probe_cmd->add_option("--name", c.name);
  probe_cmd->add_option("--n-max", c.n_max);
  probe_cmd->add_option("--epsilon", c.epsilon);
  probe_cmd->add_option("--hits", c.hits, "Comma-separated hit times");
  probe_cmd->add_option("--horizon", c.horizon);

  auto* oracle_cmd = app.add_subcommand("oracle", "Monte Carlo walk oracle");
  walk(oracle_cmd);
  oracle_cmd->add_option("mode", c.mode, "transition or return");
  oracle_cmd->add_option("--n", c.n);
  oracle_cmd->add_option("--i", c.i);
  oracle_cmd->add_option("--j", c.j);
  oracle_cmd->add_option("--horizon", c.horizon);
  oracle_cmd->add_option("--seed", c.seed);
  oracle_cmd->add_option("--samples", c.samples);

  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit distance probe");
  walk(orbit_cmd);
  orbit_cmd->add_option("--space", c.space);
  orbit_cmd->add_option("--v", c.v);
  orbit_cmd->add_option("--target", c.targets);
  orbit_cmd->add_option("--n-max", c.n_max);
  orbit_cmd->add_option("--epsilon", c.epsilon);
  orbit_cmd->add_flag("--projective", c.projective);

  for (auto* sub : app.get_subcommands({})) common(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    Output o;
    CLI::App* sub = app.get_subcommands().front();
    c.subcommand = sub->get_name();
    if (c.subcommand == "classify") o = run_classify(c);
    else if (c.subcommand == "spectrum") o = run_spectrum(c);
    else if (c.subcommand == "inverse") o = run_inverse(c);
    else if (c.subcommand == "kernel") o = run_kernel(c);
    else if (c.subcommand == "certify") o = run_certify(c);
    else if (c.subcommand == "probe") o = run_probe(c);
    else if (c.subcommand == "oracle") o = run_oracle(c);
    else o = run_orbit(c);
    emit(o, c, args, out);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUndeterminedError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUndeterminedError;
  }
  return kOk;
}

}  // namespace markovdyn::cli
