#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "markovdyn/spectral.hpp"
#include "oracles.hpp"

using namespace markovdyn;

TEST_CASE("transfer matrix invariants") {
  for (double p : {0.2, 0.5, 0.75}) {
    for (double re = -2.0; re <= 2.0; re += 0.25) {
      for (double im : {0.0, 0.7}) {
        const Complex lambda(re, im);
        const TransferMatrix m = TransferMatrix::for_walk(p, lambda);
        CHECK(std::abs(m.det() - Complex((1 - p) / p)) < 1e-12);
        const auto roots = m.eigenvalues();
        CHECK(std::abs(roots[0] * roots[1] - m.det()) < 1e-12);
        CHECK(std::abs(roots[0] + roots[1] - m.trace()) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(TransferMatrix::for_walk(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("eigen sequences solve W q = lambda q") {
  const double p = 0.7;
  const Complex lambda(0.4, 0.2);
  const auto q = eigen_sequence(p, lambda, 40);
  const BandedOp w(Lattice::HalfLine, PSeq::constant(p));
  const FinSeq x(Lattice::HalfLine, 0, q);
  const FinSeq wx = w.apply(x);
  for (Index i = 0; i < 39; ++i) CHECK(std::abs(wx[i] - lambda * x[i]) < 1e-10 * (1 + std::abs(x[i])));
}

TEST_CASE("membership for p = 3/4 on c0") {
  for (double lambda = 0.0; lambda < 1.0; lambda += 0.05) {
    CAPTURE(lambda);
    CHECK(point_spectrum_probe(0.75, lambda, SpaceSpec::c0()).member == Membership::Yes);
  }
  CHECK(point_spectrum_probe(0.75, 1.5, SpaceSpec::c0()).member == Membership::No);
  // lambda = 1 is excluded by a vanishing coefficient, not by the root modulus.
  const SpectrumVerdict one = point_spectrum_probe(0.75, 1.0, SpaceSpec::c0());
  CHECK(one.member == Membership::Undetermined);
  CHECK(one.dominant_modulus == doctest::Approx(1.0));
}

TEST_CASE("roots for lambda = 1.1 at p = 3/4") {
  const SpectrumVerdict v = point_spectrum_probe(0.75, 1.1, SpaceSpec::c0());
  // 0.75 z^2 - 1.1 z + 0.25 = 0
  const double disc = std::sqrt(1.21 - 0.75);
  CHECK(v.alpha.real() == doctest::Approx((1.1 + disc) / 1.5));
  CHECK(v.beta.real() == doctest::Approx((1.1 - disc) / 1.5));
  CHECK(v.member == Membership::No);
}

TEST_CASE("no membership for p <= 1/2 on c0 and l2") {
  for (double p : {0.3, 0.5}) {
    for (double re = -2.0; re <= 2.0; re += 0.1) {
      for (double im = -2.0; im <= 2.0; im += 0.1) {
        if (std::abs(Complex(re, im)) > 2.0) continue;
        for (const SpaceSpec& s : {SpaceSpec::c0(), SpaceSpec::lq(2)}) {
          CHECK(point_spectrum_probe(p, Complex(re, im), s).member != Membership::Yes);
        }
      }
    }
  }
}

TEST_CASE("p = 1/2 on linf: the unit circle case") {
  const SpectrumVerdict v = point_spectrum_probe(0.5, 0.5, SpaceSpec::linf());
  CHECK(v.member == Membership::Yes);
  CHECK(v.on_unit_circle_exact);
  CHECK(point_spectrum_probe(0.5, 0.5, SpaceSpec::c0()).member == Membership::No);
}

TEST_CASE("defective roots") {
  // lambda^2 = 4 p (1 - p) gives a double root.
  const double p = 0.8;
  const SpectrumVerdict v = point_spectrum_probe(p, 2.0 * std::sqrt(p * (1 - p)), SpaceSpec::c0());
  CHECK(v.defective);
  CHECK(v.dominant_modulus == doctest::Approx(std::sqrt((1 - p) / p)));
  CHECK(v.member == Membership::Yes);
}

TEST_CASE("certified disk") {
  CHECK(certified_disk_radius(0.3, SpaceSpec::c0()) == 0.0);
  const double r = certified_disk_radius(0.75, SpaceSpec::c0());
  CHECK(r > 0.0);
  CHECK(r < 1.0);
  CHECK(point_spectrum_probe(0.75, std::polar(r, 1.0), SpaceSpec::c0()).member == Membership::Yes);
}

TEST_CASE("eigenvector of G at 0") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const PSeq pseq = oracle::random_list_pseq(rng);
    const auto u = g_zero_eigenvector(pseq, 40);
    const BandedOp g(Lattice::HalfLine, pseq);
    const FinSeq gu = g.apply(FinSeq::from_real(Lattice::HalfLine, 0, u));
    for (Index i = 0; i < 40; ++i) CHECK(std::abs(gu[i]) < 1e-12 * (1 + std::abs(u[static_cast<std::size_t>(i)])));
    for (Index n = 1; n <= 40; ++n) {
      const double un = u[static_cast<std::size_t>(n)];
      const double sign = ((n + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
      CHECK(un == doctest::Approx(sign * weight_w(pseq, n)).epsilon(1e-12));
    }
  }
  const auto u = g_zero_eigenvector(PSeq::constant(0.75), 4);
  CHECK(u[1] == doctest::Approx(-1.0 / 3));
  CHECK(u[2] == doctest::Approx(-1.0 / 3));
  CHECK(u[3] == doctest::Approx(1.0 / 9));
  CHECK(u[4] == doctest::Approx(1.0 / 9));
}

TEST_CASE("left eigenvector of G at 0") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 10; ++t) {
    const PSeq pseq = oracle::random_list_pseq(rng, 0.1, 0.9);
    const auto u = dual_zero_eigenvector(pseq, 40);
    const BandedOp g(Lattice::HalfLine, pseq);
    const FinSeq ug = g.apply_transpose(FinSeq::from_real(Lattice::HalfLine, 0, u));
    for (Index j = 0; j < 39; ++j) CHECK(std::abs(ug[j]) < 1e-12 * (1 + std::abs(u[static_cast<std::size_t>(j)])));
  }
  // For constant p: u_{n+2} = (p / (p - 1)) u_n.
  const auto u = dual_zero_eigenvector(PSeq::constant(0.25), 6);
  CHECK(u[1] == doctest::Approx(-1.0));
  CHECK(u[2] == doctest::Approx(-1.0 / 3));
  CHECK(u[4] == doctest::Approx(1.0 / 9));
}

TEST_CASE("dual obstruction") {
  const DualVerdict low = dual_zero_obstruction(PSeq::constant(0.25), SpaceSpec::c0());
  CHECK(low.zero_in_dual_spectrum == Membership::Yes);
  CHECK(low.not_hypercyclic);
  CHECK(low.weight_condition.behavior == SeriesBehavior::Convergent);
  const DualVerdict high = dual_zero_obstruction(PSeq::constant(0.75), SpaceSpec::lq(2));
  CHECK(high.zero_in_dual_spectrum == Membership::No);
  CHECK_FALSE(high.not_hypercyclic);
  const DualVerdict l1 = dual_zero_obstruction(PSeq::constant(0.4), SpaceSpec::lq(1));
  CHECK(l1.dual == SpaceSpec::linf());
  CHECK(l1.zero_in_dual_spectrum == Membership::Yes);
  CHECK(dual_zero_obstruction(PSeq::constant(0.4), SpaceSpec::linf()).zero_in_dual_spectrum ==
        Membership::Undetermined);
}

TEST_CASE("dual space pairing") {
  CHECK(dual_space(SpaceSpec::c0()) == SpaceSpec::lq(1));
  CHECK(dual_space(SpaceSpec::lq(1)) == SpaceSpec::linf());
  CHECK(dual_space(SpaceSpec::lq(3))->q() == doctest::Approx(1.5));
  CHECK_FALSE(dual_space(SpaceSpec::linf()).has_value());
}

TEST_CASE("symmetric walk: bounded eigen-sequences on an interval") {
  std::vector<double> lambdas;
  for (int k = -19; k <= 19; ++k) lambdas.push_back(0.05 * k);
  for (Lattice lattice : {Lattice::HalfLine, Lattice::Line}) {
    const auto r = symmetric_dual_interval_check(2000, lambdas, lattice);
    CHECK(r.symmetric);
    CHECK(r.certified == static_cast<int>(lambdas.size()));
    CHECK(r.not_supercyclic_on_l1);
  }
  const auto outside = symmetric_dual_interval_check(200, {1.5}, Lattice::HalfLine);
  CHECK(outside.certified == 0);
}
