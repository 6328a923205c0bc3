#include "markovdyn/operators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace markovdyn {
namespace {

void check_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    std::ostringstream msg;
    msg << "probability " << p << " outside (0,1)";
    throw std::invalid_argument(msg.str());
  }
}

double parse_double(std::string_view text) {
  // from_chars rejects a leading '+', strip it for friendliness.
  if (text.starts_with('+')) text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> values;
  if (text.empty()) return values;
  for (auto item : split(text, ',')) values.push_back(parse_double(item));
  return values;
}

std::string format_double(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

Index floor_mod(Index a, Index m) {
  const Index r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

PSeq::PSeq(Form form) : form_(std::move(form)) {}

PSeq PSeq::constant(double p) {
  check_probability(p);
  return PSeq(Constant{p});
}

PSeq PSeq::list_with_tail(std::vector<double> values, double tail, Index start) {
  for (double p : values) check_probability(p);
  check_probability(tail);
  return PSeq(ListWithTail{std::move(values), tail, start});
}

PSeq PSeq::periodic(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("periodic sequence needs values");
  for (double p : values) check_probability(p);
  return PSeq(Periodic{std::move(values)});
}

PSeq PSeq::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("p-sequence must look like kind:values, got '" +
                                std::string(text) + "'");
  }
  const auto kind = text.substr(0, colon);
  auto fields = split(text.substr(colon + 1), ';');
  const auto body = fields.front();
  std::optional<double> tail;
  std::optional<Index> start;
  for (std::size_t k = 1; k < fields.size(); ++k) {
    const auto eq = fields[k].find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("malformed option '" + std::string(fields[k]) + "'");
    }
    const auto key = fields[k].substr(0, eq);
    const auto value = fields[k].substr(eq + 1);
    if (key == "tail") {
      tail = parse_double(value);
    } else if (key == "start") {
      const double s = parse_double(value);
      if (s != std::floor(s)) throw std::invalid_argument("start must be an integer");
      start = static_cast<Index>(s);
    } else {
      throw std::invalid_argument("unknown option '" + std::string(key) + "'");
    }
  }
  if (kind == "const") {
    if (tail || start) throw std::invalid_argument("const takes no options");
    return constant(parse_double(body));
  }
  if (kind == "list") {
    if (!tail) throw std::invalid_argument("list needs ;tail=");
    return list_with_tail(parse_list(body), *tail, start.value_or(0));
  }
  if (kind == "periodic") {
    if (tail || start) throw std::invalid_argument("periodic takes no options");
    return periodic(parse_list(body));
  }
  throw std::invalid_argument("unknown p-sequence kind '" + std::string(kind) + "'");
}

double PSeq::at(Index n) const {
  return std::visit(
      [n](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return f.p;
        } else if constexpr (std::is_same_v<T, ListWithTail>) {
          const Index k = n - f.start;
          if (k >= 0 && k < static_cast<Index>(f.values.size())) {
            return f.values[static_cast<std::size_t>(k)];
          }
          return f.tail;
        } else {
          const auto period = static_cast<Index>(f.values.size());
          return f.values[static_cast<std::size_t>(floor_mod(n, period))];
        }
      },
      form_);
}

std::optional<double> PSeq::constant_value() const {
  if (const auto* c = std::get_if<Constant>(&form_)) return c->p;
  return std::nullopt;
}

Index PSeq::regular_from() const {
  if (const auto* l = std::get_if<ListWithTail>(&form_)) {
    return std::max<Index>(0, l->start + static_cast<Index>(l->values.size()));
  }
  return 0;
}

Index PSeq::period() const {
  if (const auto* per = std::get_if<Periodic>(&form_)) {
    return static_cast<Index>(per->values.size());
  }
  return 1;
}

double PSeq::sup_ratio_from(Index n) const {
  auto ratio = [](double p) { return (1.0 - p) / p; };
  double sup = 0.0;
  const Index stop = std::max(n, regular_from()) + period();
  for (Index k = n; k < stop; ++k) sup = std::max(sup, ratio(at(k)));
  return sup;
}

std::string PSeq::to_string() const {
  auto join = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) s += ',';
      s += format_double(v[k]);
    }
    return s;
  };
  return std::visit(
      [&](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return "const:" + format_double(f.p);
        } else if constexpr (std::is_same_v<T, ListWithTail>) {
          std::string s = "list:" + join(f.values) + ";tail=" + format_double(f.tail);
          if (f.start != 0) s += ";start=" + std::to_string(f.start);
          return s;
        } else {
          return "periodic:" + join(f.values);
        }
      },
      form_);
}

std::string_view to_string(WalkKind kind) {
  switch (kind) {
    case WalkKind::HomogeneousHalfLine: return "W_p";
    case WalkKind::HomogeneousLine: return "W_p (line)";
    case WalkKind::InhomogeneousHalfLine: return "G_p";
    case WalkKind::InhomogeneousLine: return "G_p (line)";
  }
  return "?";
}

BandedOp::BandedOp(Lattice lattice, PSeq pseq)
    : lattice_(lattice), pseq_(std::move(pseq)) {}

BandedOp make_walk(Lattice lattice, PSeq pseq) {
  return BandedOp(lattice, std::move(pseq));
}

WalkKind BandedOp::kind() const {
  const bool homogeneous = pseq_.constant_value().has_value();
  if (lattice_ == Lattice::HalfLine) {
    return homogeneous ? WalkKind::HomogeneousHalfLine : WalkKind::InhomogeneousHalfLine;
  }
  return homogeneous ? WalkKind::HomogeneousLine : WalkKind::InhomogeneousLine;
}

void BandedOp::check_lattice(const FinSeq& x) const {
  if (x.lattice() != lattice_) {
    throw std::invalid_argument("operator and sequence live on different lattices");
  }
}

void BandedOp::check_index(Index i) const {
  if (lattice_ == Lattice::HalfLine && i < 0) {
    throw std::out_of_range("negative index on the half-line");
  }
}

double BandedOp::entry(Index i, Index j) const {
  check_index(i);
  check_index(j);
  const double pi = pseq_.at(i);
  if (j == i + 1) return pi;
  if (lattice_ == Lattice::HalfLine && i == 0) return j == 0 ? 1.0 - pi : 0.0;
  if (j == i - 1) return 1.0 - pi;
  return 0.0;
}

FinSeq BandedOp::apply(const FinSeq& x) const {
  check_lattice(x);
  if (x.size() == 0) return FinSeq(lattice_);
  Index lo = x.offset() - 1;
  if (lattice_ == Lattice::HalfLine) lo = std::max<Index>(lo, 0);
  const Index hi = x.end() + 1;
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo));
  for (Index i = lo; i < hi; ++i) {
    const double pi = pseq_.at(i);
    Complex acc = pi * x[i + 1];
    if (lattice_ == Lattice::HalfLine && i == 0) {
      acc += (1.0 - pi) * x[0];
    } else {
      acc += (1.0 - pi) * x[i - 1];
    }
    out[static_cast<std::size_t>(i - lo)] = acc;
  }
  return FinSeq(lattice_, lo, std::move(out));
}

FinSeq BandedOp::apply_transpose(const FinSeq& u) const {
  check_lattice(u);
  if (u.size() == 0) return FinSeq(lattice_);
  Index lo = u.offset() - 1;
  if (lattice_ == Lattice::HalfLine) lo = std::max<Index>(lo, 0);
  const Index hi = u.end() + 1;
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo));
  // (u A)_j = u_{j-1} A_{j-1,j} + u_j A_{j,j} + u_{j+1} A_{j+1,j}
  for (Index j = lo; j < hi; ++j) {
    Complex acc{};
    if (lattice_ == Lattice::Line || j >= 1) acc += u[j - 1] * pseq_.at(j - 1);
    if (lattice_ == Lattice::HalfLine && j == 0) acc += u[0] * (1.0 - pseq_.at(0));
    acc += u[j + 1] * (1.0 - pseq_.at(j + 1));
    out[static_cast<std::size_t>(j - lo)] = acc;
  }
  return FinSeq(lattice_, lo, std::move(out));
}

FinSeq BandedOp::power_apply(int n, const FinSeq& x) const {
  if (n < 0) throw std::invalid_argument("negative power");
  FinSeq y = x;
  for (int k = 0; k < n; ++k) y = apply(y);
  return y;
}

FinSeq BandedOp::power_apply_transpose(int n, const FinSeq& u) const {
  if (n < 0) throw std::invalid_argument("negative power");
  FinSeq y = u;
  for (int k = 0; k < n; ++k) y = apply_transpose(y);
  return y;
}

double BandedOp::power_entry(int n, Index i, Index j) const {
  check_index(i);
  check_index(j);
  return power_apply(n, FinSeq::unit(lattice_, j))[i].real();
}

}  // namespace markovdyn
