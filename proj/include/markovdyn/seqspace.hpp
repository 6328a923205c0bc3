#ifndef MARKOVDYN_SEQSPACE_HPP_
#define MARKOVDYN_SEQSPACE_HPP_

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace markovdyn {

using Complex = std::complex<double>;
using Index = std::int64_t;

// Index set of a sequence: the half-line Z+ = {0, 1, ...} or the full line Z.
enum class Lattice { HalfLine, Line };

std::string_view to_string(Lattice lattice);
Lattice parse_lattice(std::string_view text);

// Finitely supported complex sequence. Coordinates outside
// [offset, offset + size) are zero. On the half-line the offset is never
// negative. Equality compares canonical (zero-trimmed) forms; trimming only
// removes stored values that are exactly zero.
class FinSeq {
 public:
  explicit FinSeq(Lattice lattice = Lattice::HalfLine);
  FinSeq(Lattice lattice, Index offset, std::vector<Complex> entries);

  static FinSeq unit(Lattice lattice, Index i);
  static FinSeq from_real(Lattice lattice, Index offset,
                          std::span<const double> values);

  Lattice lattice() const { return lattice_; }
  Index offset() const { return offset_; }
  // One past the last stored index.
  Index end() const { return offset_ + static_cast<Index>(entries_.size()); }
  std::size_t size() const { return entries_.size(); }
  std::span<const Complex> entries() const { return entries_; }

  Complex operator[](Index i) const;
  bool is_zero() const;

  FinSeq trimmed() const;
  // Keeps coordinates in [first, last); everything else becomes zero.
  FinSeq restricted(Index first, Index last) const;
  std::vector<double> real_parts() const;

  FinSeq& operator+=(const FinSeq& other);
  FinSeq& operator-=(const FinSeq& other);
  FinSeq& operator*=(Complex scale);

  friend FinSeq operator+(FinSeq lhs, const FinSeq& rhs) { return lhs += rhs; }
  friend FinSeq operator-(FinSeq lhs, const FinSeq& rhs) { return lhs -= rhs; }
  friend FinSeq operator*(Complex s, FinSeq x) { return x *= s; }
  friend FinSeq operator*(FinSeq x, Complex s) { return x *= s; }
  friend bool operator==(const FinSeq& a, const FinSeq& b);

 private:
  void add_scaled(const FinSeq& other, double sign);

  Lattice lattice_;
  Index offset_ = 0;
  std::vector<Complex> entries_;
};

// Ambient sequence space. c is represented for norm purposes only: a finitely
// supported sequence converges to 0, so probes that need a nonzero limit carry
// it separately.
class SpaceSpec {
 public:
  enum class Kind { C0, C, Lq, LInf };

  static SpaceSpec c0() { return SpaceSpec(Kind::C0, 0.0); }
  static SpaceSpec c() { return SpaceSpec(Kind::C, 0.0); }
  static SpaceSpec lq(double q);
  static SpaceSpec linf() { return SpaceSpec(Kind::LInf, 0.0); }

  // Accepts c0, c, linf, l1, l2, l1.5, lq:3.
  static SpaceSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  // Exponent for Lq; 0 otherwise.
  double q() const { return q_; }
  bool sup_normed() const { return kind_ != Kind::Lq; }
  std::string name() const;

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;

 private:
  SpaceSpec(Kind kind, double q) : kind_(kind), q_(q) {}
  Kind kind_;
  double q_;
};

double norm(const FinSeq& x, const SpaceSpec& space);
double sup_norm(const FinSeq& x);

// x_n = sum_{k=0}^{n} a_k v_{n-k} on the half-line. Satisfies
// |x| <= |a|_1 |v| in c0 and every lq.
FinSeq convolve_bounded(const FinSeq& a, const FinSeq& v);

// Comparison slack for checks against analytic bounds: an absolute part plus
// a part relative to the magnitude of the compared quantities.
struct Tolerance {
  double abs = 1e-10;
  double rel = 1e-12;

  double slack(double magnitude) const;
  bool le(double lhs, double rhs) const;
  bool near(double a, double b) const;

  // Reads MARKOVDYN_TOL (absolute part) when set.
  static Tolerance from_env();
};

}  // namespace markovdyn

#endif  // MARKOVDYN_SEQSPACE_HPP_
