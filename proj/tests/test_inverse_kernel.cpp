#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "markovdyn/inverse_kernel.hpp"
#include "oracles.hpp"

using namespace markovdyn;

TEST_CASE("right inverse of e0 at p = 3/4") {
  const BandedOp w(Lattice::HalfLine, PSeq::constant(0.75));
  const FinSeq u = right_inverse(w, FinSeq::unit(Lattice::HalfLine, 0));
  CHECK(u[0] == Complex{});
  CHECK(u[1].real() == doctest::Approx(4.0 / 3));
  CHECK(u[2] == Complex{});
  CHECK(u[3].real() == doctest::Approx(-4.0 / 9));
  for (int j = 0; j < 10; ++j) {
    CHECK(u[2 * j + 1].real() == doctest::Approx(4.0 / 3 * std::pow(-1.0 / 3, j)).epsilon(1e-14));
  }
}

TEST_CASE("right inverse matches the closed form for constant p") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> pdist(0.55, 0.95);
  for (int t = 0; t < 25; ++t) {
    const double p = pdist(rng);
    const auto v = oracle::random_vector(rng);
    const BandedOp w(Lattice::HalfLine, PSeq::constant(p));
    const FinSeq u = right_inverse(w, FinSeq::from_real(Lattice::HalfLine, 0, v));
    for (Index n = 0; n < 60; ++n) {
      CHECK(u[n].real() == doctest::Approx(oracle::right_inverse_closed_form(p, v, n))
                               .epsilon(1e-12)
                               .scale(1.0));
    }
  }
}

TEST_CASE("inhomogeneous head with a regular tail") {
  const BandedOp g(Lattice::HalfLine, PSeq::list_with_tail({0.5}, 0.75));
  const InverseResult r = right_inverse_detailed(g, FinSeq::unit(Lattice::HalfLine, 0));
  CHECK(r.u[1].real() == doctest::Approx(2.0));
  CHECK(r.u[3].real() == doctest::Approx(-2.0 / 3));
  CHECK(r.tail_certified);
  CHECK(r.tail_bound <= 1e-15);
}

TEST_CASE("A S v = v on random inhomogeneous walks") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const BandedOp g(Lattice::HalfLine, oracle::random_list_pseq(rng));
    const FinSeq v = FinSeq::from_real(Lattice::HalfLine, 0, oracle::random_vector(rng));
    const InverseResult r = right_inverse_detailed(g, v);
    CAPTURE(g.pseq().to_string());
    CHECK(r.tail_certified);
    CHECK(sup_norm(g.apply(r.u) - v) < 1e-10);
  }
}

TEST_CASE("powers of S vanish on the first n coordinates") {
  const BandedOp w(Lattice::HalfLine, PSeq::constant(0.6));
  const FinSeq v(Lattice::HalfLine, 0, {1.0, -0.5, 0.25});
  for (int n = 0; n <= 8; ++n) {
    const FinSeq u = right_inverse_power(w, v, n);
    for (Index k = 0; k < n; ++k) CHECK(u[k] == Complex{});
    CHECK(sup_norm(w.power_apply(n, u) - v) < 1e-10);
  }
  CHECK_THROWS_AS(right_inverse_power(w, v, -1), std::invalid_argument);
}

TEST_CASE("zero maps to zero") {
  const BandedOp w(Lattice::HalfLine, PSeq::constant(0.6));
  CHECK(right_inverse(w, FinSeq(Lattice::HalfLine)).is_zero());
}

TEST_CASE("no ratio bound means no truncation certificate") {
  const BandedOp w(Lattice::HalfLine, PSeq::constant(0.4));
  const InverseResult r = right_inverse_detailed(w, FinSeq::unit(Lattice::HalfLine, 0), {1e-16, 500});
  CHECK_FALSE(r.tail_certified);
}

TEST_CASE("measured norm bound of S") {
  for (double p : {0.6, 0.75, 0.9}) {
    const BandedOp w(Lattice::HalfLine, PSeq::constant(p));
    const double analytic = 1.0 / (2.0 * p - 1.0);
    for (const SpaceSpec& s : {SpaceSpec::c0(), SpaceSpec::lq(1), SpaceSpec::lq(2)}) {
      const double b = right_inverse_norm_bound(w, s);
      CHECK(b <= analytic * (1 + 1e-12));
      CHECK(b >= analytic * (1 - 1e-6));
    }
  }
  CHECK(std::isinf(right_inverse_norm_bound(BandedOp(Lattice::HalfLine, PSeq::constant(0.5)),
                                            SpaceSpec::c0())));
  CHECK_THROWS_AS(right_inverse_norm_bound(BandedOp(Lattice::Line, PSeq::constant(0.7)),
                                           SpaceSpec::c0()),
                  std::invalid_argument);
}

TEST_CASE("kernel basis of W at p = 3/4") {
  const BandedOp w(Lattice::HalfLine, PSeq::constant(0.75));
  const KernelBasis b = kernel_basis(w, 1);
  REQUIRE(b.vectors.size() == 1);
  CHECK(b.decayed);
  const double expect[] = {1.0, -1.0 / 3, -1.0 / 3, 1.0 / 9, 1.0 / 9, -1.0 / 27};
  for (int k = 0; k < 6; ++k) CHECK(b.vectors[0][k].real() == doctest::Approx(expect[k]));
}

TEST_CASE("kernel vectors are annihilated and normalized") {
  for (const char* text : {"const:0.6", "const:0.9", "list:0.3,0.8;tail=0.7", "periodic:0.8,0.65"}) {
    const BandedOp op(Lattice::HalfLine, PSeq::parse(text));
    for (int n = 1; n <= 4; ++n) {
      const KernelBasis b = kernel_basis(op, n);
      CAPTURE(text);
      CAPTURE(n);
      CHECK(b.decayed);
      for (int i = 0; i < n; ++i) {
        const FinSeq& v = b.vectors[static_cast<std::size_t>(i)];
        for (int k = 0; k < n; ++k) CHECK(v[k] == Complex(i == k ? 1.0 : 0.0));
        CHECK(sup_norm(op.power_apply(n, v)) < 1e-8);
      }
    }
  }
}

TEST_CASE("kernel is trivial for p <= 1/2") {
  for (double p : {0.5, 0.3}) {
    CHECK_THROWS_AS(kernel_basis(BandedOp(Lattice::HalfLine, PSeq::constant(p)), 1),
                    std::domain_error);
  }
  // Growing kernel vectors are reported, not hidden.
  const KernelBasis b = kernel_basis(BandedOp(Lattice::HalfLine, PSeq::parse("periodic:0.9,0.45")), 1, 400);
  CHECK_FALSE(b.decayed);
}

TEST_CASE("dense approximation matches the head of x") {
  const BandedOp w(Lattice::HalfLine, PSeq::constant(0.9));
  const FinSeq x(Lattice::HalfLine, 0, {0.5, -1.0, 2.0});
  const DenseApprox d = dense_approx(x, w, SpaceSpec::c0());
  CHECK(d.order == 3);
  for (Index k = 0; k < 3; ++k) CHECK(std::abs(d.approximation[k] - x[k]) < 1e-14);
  CHECK(std::isfinite(d.error));
  CHECK(sup_norm(w.power_apply(3, d.approximation)) < 1e-8);
}
