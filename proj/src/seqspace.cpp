#include "markovdyn/seqspace.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace markovdyn {

std::string_view to_string(Lattice lattice) {
  return lattice == Lattice::HalfLine ? "half-line" : "line";
}

Lattice parse_lattice(std::string_view text) {
  if (text == "half" || text == "half-line" || text == "Z+") return Lattice::HalfLine;
  if (text == "line" || text == "Z") return Lattice::Line;
  throw std::invalid_argument("unknown lattice '" + std::string(text) + "'");
}

FinSeq::FinSeq(Lattice lattice) : lattice_(lattice) {}

FinSeq::FinSeq(Lattice lattice, Index offset, std::vector<Complex> entries)
    : lattice_(lattice), offset_(offset), entries_(std::move(entries)) {
  if (lattice_ == Lattice::HalfLine && offset_ < 0) {
    throw std::invalid_argument("half-line sequence with negative offset");
  }
  if (entries_.empty()) offset_ = 0;
}

FinSeq FinSeq::unit(Lattice lattice, Index i) {
  return FinSeq(lattice, i, {Complex(1.0, 0.0)});
}

FinSeq FinSeq::from_real(Lattice lattice, Index offset,
                         std::span<const double> values) {
  return FinSeq(lattice, offset, std::vector<Complex>(values.begin(), values.end()));
}

Complex FinSeq::operator[](Index i) const {
  if (i < offset_ || i >= end()) return {};
  return entries_[static_cast<std::size_t>(i - offset_)];
}

bool FinSeq::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Complex z) { return z == Complex{}; });
}

FinSeq FinSeq::trimmed() const {
  auto nonzero = [](Complex z) { return z != Complex{}; };
  auto first = std::find_if(entries_.begin(), entries_.end(), nonzero);
  if (first == entries_.end()) return FinSeq(lattice_);
  auto last = std::find_if(entries_.rbegin(), entries_.rend(), nonzero).base();
  return FinSeq(lattice_, offset_ + (first - entries_.begin()),
                std::vector<Complex>(first, last));
}

FinSeq FinSeq::restricted(Index first, Index last) const {
  const Index lo = std::max(first, offset_);
  const Index hi = std::min(last, end());
  if (lo >= hi) return FinSeq(lattice_);
  return FinSeq(lattice_, lo,
                std::vector<Complex>(entries_.begin() + (lo - offset_),
                                     entries_.begin() + (hi - offset_)));
}

std::vector<double> FinSeq::real_parts() const {
  std::vector<double> out(entries_.size());
  std::transform(entries_.begin(), entries_.end(), out.begin(),
                 [](Complex z) { return z.real(); });
  return out;
}

void FinSeq::add_scaled(const FinSeq& other, double sign) {
  if (other.lattice_ != lattice_) {
    throw std::invalid_argument("lattice mismatch in sequence arithmetic");
  }
  if (other.entries_.empty()) return;
  if (entries_.empty()) {
    offset_ = other.offset_;
    entries_.assign(other.entries_.size(), Complex{});
  }
  const Index lo = std::min(offset_, other.offset_);
  const Index hi = std::max(end(), other.end());
  if (lo != offset_ || hi != end()) {
    std::vector<Complex> grown(static_cast<std::size_t>(hi - lo));
    std::copy(entries_.begin(), entries_.end(), grown.begin() + (offset_ - lo));
    entries_ = std::move(grown);
    offset_ = lo;
  }
  for (std::size_t k = 0; k < other.entries_.size(); ++k) {
    entries_[static_cast<std::size_t>(other.offset_ - offset_) + k] +=
        sign * other.entries_[k];
  }
}

FinSeq& FinSeq::operator+=(const FinSeq& other) {
  add_scaled(other, 1.0);
  return *this;
}

FinSeq& FinSeq::operator-=(const FinSeq& other) {
  add_scaled(other, -1.0);
  return *this;
}

FinSeq& FinSeq::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

bool operator==(const FinSeq& a, const FinSeq& b) {
  if (a.lattice_ != b.lattice_) return false;
  const FinSeq ta = a.trimmed();
  const FinSeq tb = b.trimmed();
  return ta.offset_ == tb.offset_ && ta.entries_ == tb.entries_;
}

SpaceSpec SpaceSpec::lq(double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) {
    throw std::invalid_argument("lq space requires finite q >= 1");
  }
  return SpaceSpec(Kind::Lq, q);
}

SpaceSpec SpaceSpec::parse(std::string_view text) {
  if (text == "c0") return c0();
  if (text == "c") return c();
  if (text == "linf" || text == "l_inf") return linf();
  std::string_view digits;
  if (text.starts_with("lq:")) {
    digits = text.substr(3);
  } else if (text.starts_with("l")) {
    digits = text.substr(1);
  }
  if (!digits.empty()) {
    double q = 0.0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return lq(q);
  }
  throw std::invalid_argument("unknown space '" + std::string(text) + "'");
}

std::string SpaceSpec::name() const {
  switch (kind_) {
    case Kind::C0: return "c0";
    case Kind::C: return "c";
    case Kind::LInf: return "linf";
    case Kind::Lq: {
      std::string s = std::to_string(q_);
      s.erase(s.find_last_not_of('0') + 1);
      if (s.back() == '.') s.pop_back();
      return "l" + s;
    }
  }
  return "?";
}

double sup_norm(const FinSeq& x) {
  double m = 0.0;
  for (Complex z : x.entries()) m = std::max(m, std::abs(z));
  return m;
}

double norm(const FinSeq& x, const SpaceSpec& space) {
  if (space.sup_normed()) return sup_norm(x);
  const double scale = sup_norm(x);
  if (scale == 0.0) return 0.0;
  const double q = space.q();
  double sum = 0.0;
  if (q == 1.0) {
    for (Complex z : x.entries()) sum += std::abs(z);
    return sum;
  }
  for (Complex z : x.entries()) sum += std::pow(std::abs(z) / scale, q);
  return scale * std::pow(sum, 1.0 / q);
}

FinSeq convolve_bounded(const FinSeq& a, const FinSeq& v) {
  if (a.lattice() != Lattice::HalfLine || v.lattice() != Lattice::HalfLine) {
    throw std::invalid_argument("convolution is defined on the half-line only");
  }
  if (a.size() == 0 || v.size() == 0) return FinSeq(Lattice::HalfLine);
  std::vector<Complex> x(a.size() + v.size() - 1);
  const auto ae = a.entries();
  const auto ve = v.entries();
  for (std::size_t k = 0; k < ae.size(); ++k) {
    for (std::size_t m = 0; m < ve.size(); ++m) x[k + m] += ae[k] * ve[m];
  }
  return FinSeq(Lattice::HalfLine, a.offset() + v.offset(), std::move(x));
}

double Tolerance::slack(double magnitude) const {
  return abs + rel * std::abs(magnitude);
}

bool Tolerance::le(double lhs, double rhs) const {
  return lhs <= rhs + slack(std::max(std::abs(lhs), std::abs(rhs)));
}

bool Tolerance::near(double a, double b) const {
  return std::abs(a - b) <= slack(std::max(std::abs(a), std::abs(b)));
}

Tolerance Tolerance::from_env() {
  Tolerance tol;
  if (const char* env = std::getenv("MARKOVDYN_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end != env && *end == '\0' && value > 0.0) tol.abs = value;
  }
  return tol;
}

}  // namespace markovdyn
