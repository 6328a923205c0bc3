#ifndef MARKOVDYN_OPERATORS_HPP_
#define MARKOVDYN_OPERATORS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "markovdyn/seqspace.hpp"

namespace markovdyn {

// Jump-probability sequence p_n, each value strictly inside (0, 1).
//
// Text forms: "const:0.75", "list:0.5,0.6;tail=0.75", "periodic:0.6,0.4".
// A list window may be shifted with ";start=-2" (used on the line): value k
// of the list is p_{start+k}, and every index outside the window gets the
// tail. Periodic sequences satisfy p_n = values[n mod period] for all n in Z.
class PSeq {
 public:
  struct Constant {
    double p;
  };
  struct ListWithTail {
    std::vector<double> values;
    double tail;
    Index start = 0;
  };
  struct Periodic {
    std::vector<double> values;
  };
  using Form = std::variant<Constant, ListWithTail, Periodic>;

  static PSeq constant(double p);
  static PSeq list_with_tail(std::vector<double> values, double tail, Index start = 0);
  static PSeq periodic(std::vector<double> values);
  static PSeq parse(std::string_view text);

  double at(Index n) const;
  const Form& form() const { return form_; }
  std::optional<double> constant_value() const;
  bool is_periodic() const { return std::holds_alternative<Periodic>(form_); }

  // sup over k >= n of (1 - p_k) / p_k, i.e. sup |r_k| for r_k = (p_k - 1)/p_k.
  double sup_ratio_from(Index n) const;
  // Smallest index past which p_n follows the tail or the period exactly.
  Index regular_from() const;
  // Length of one repeating block past regular_from() (1 for constant tails).
  Index period() const;

  std::string to_string() const;

 private:
  explicit PSeq(Form form);
  Form form_;
};

enum class WalkKind {
  HomogeneousHalfLine,    // W_p
  HomogeneousLine,        // line walk with constant p
  InhomogeneousHalfLine,  // G for a p-sequence
  InhomogeneousLine       // line walk for a p-sequence
};

std::string_view to_string(WalkKind kind);

// Transition operator of a nearest-neighbour walk, kept as an entry oracle.
// Row i moves right with probability p_i and left with 1 - p_i; on the
// half-line row 0 keeps 1 - p_0 on the diagonal instead of moving left.
// The operator acts on column vectors: (A x)_i = sum_j A_{i,j} x_j.
class BandedOp {
 public:
  BandedOp(Lattice lattice, PSeq pseq);

  Lattice lattice() const { return lattice_; }
  const PSeq& pseq() const { return pseq_; }
  WalkKind kind() const;
  double p(Index i) const { return pseq_.at(i); }

  double entry(Index i, Index j) const;

  FinSeq apply(const FinSeq& x) const;
  // Row-vector action u -> u A, i.e. the transpose applied to u.
  FinSeq apply_transpose(const FinSeq& u) const;
  FinSeq power_apply(int n, const FinSeq& x) const;
  FinSeq power_apply_transpose(int n, const FinSeq& u) const;
  // (A^n)_{i,j}, read off the column A^n e_j.
  double power_entry(int n, Index i, Index j) const;

 private:
  void check_lattice(const FinSeq& x) const;
  void check_index(Index i) const;

  Lattice lattice_;
  PSeq pseq_;
};

BandedOp make_walk(Lattice lattice, PSeq pseq);

}  // namespace markovdyn

#endif  // MARKOVDYN_OPERATORS_HPP_
