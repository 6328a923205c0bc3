#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "markovdyn/dynamics.hpp"

using namespace markovdyn;

namespace {

BandedOp half(double p) { return BandedOp(Lattice::HalfLine, PSeq::constant(p)); }

}  // namespace

TEST_CASE("FHC certificate around the threshold |lambda| = 2 at p = 3/4") {
  const Certificate yes = fhc_chaos_certificate(half(0.75), 3.0, SpaceSpec::c0());
  CHECK(yes.holds == Holds::Yes);
  CHECK(yes.scalars.at("geometric_ratio") == doctest::Approx(2.0 / 3).epsilon(1e-6));
  CHECK(yes.scalars.at("analytic_norm_bound_S") == doctest::Approx(2.0));
  CHECK(yes.scalars.at("max_kernel_residual") < 1e-8);
  CHECK_FALSE(yes.traces.at("orbit_norms_inverse").empty());

  const Certificate no = fhc_chaos_certificate(half(0.75), 1.5, SpaceSpec::c0());
  CHECK(no.holds == Holds::No);
  CHECK(no.scalars.at("geometric_ratio") > 1.0);

  // Larger |lambda| only shrinks the ratio.
  CHECK(fhc_chaos_certificate(half(0.75), Complex(0.0, 5.0), SpaceSpec::lq(2)).holds == Holds::Yes);
  CHECK(fhc_chaos_certificate(half(0.9), 1.5, SpaceSpec::lq(1)).holds == Holds::Yes);
}

TEST_CASE("FHC certificate does not apply without a kernel") {
  const Certificate c = fhc_chaos_certificate(half(0.5), 3.0, SpaceSpec::c0());
  CHECK(c.holds == Holds::Undetermined);
  CHECK_FALSE(c.reason.empty());
  CHECK(fhc_chaos_certificate(BandedOp(Lattice::Line, PSeq::constant(0.75)), 3.0, SpaceSpec::c0())
            .holds == Holds::Undetermined);
  CHECK(fhc_chaos_certificate(half(0.75), 0.0, SpaceSpec::c0()).holds == Holds::Undetermined);
}

TEST_CASE("FHC certificate on an inhomogeneous walk") {
  const BandedOp g(Lattice::HalfLine, PSeq::parse("list:0.4,0.6;tail=0.8"));
  const Certificate c = fhc_chaos_certificate(g, 10.0, SpaceSpec::c0());
  CHECK(c.holds == Holds::Yes);
  CHECK(c.scalars.at("geometric_ratio") < 1.0);
}

TEST_CASE("supercyclicity criterion") {
  for (const SpaceSpec& s : {SpaceSpec::c0(), SpaceSpec::lq(1), SpaceSpec::lq(2)}) {
    const Certificate c = supercyclicity_criterion_certificate(half(0.75), s);
    CHECK(c.holds == Holds::Yes);
    CHECK(c.scalars.at("max_relative_identity_residual") < 1e-12);
  }
  CHECK(supercyclicity_criterion_certificate(half(0.4), SpaceSpec::c0()).holds ==
        Holds::Undetermined);
  const BandedOp good(Lattice::HalfLine, PSeq::parse("periodic:0.8,0.7"));
  CHECK(supercyclicity_criterion_certificate(good, SpaceSpec::lq(2)).holds == Holds::Yes);
  // One parity chain has (1-p)/p > 1, so w_n grows.
  const BandedOp bad(Lattice::HalfLine, PSeq::parse("periodic:0.9,0.45"));
  const Certificate c = supercyclicity_criterion_certificate(bad, SpaceSpec::c0());
  CHECK(c.holds == Holds::Undetermined);
  CHECK(c.scalars.at("weight_condition_convergent") == 0.0);
}

TEST_CASE("obstruction in c for a transient walk") {
  const FinSeq e0 = FinSeq::unit(Lattice::HalfLine, 0);
  const Certificate c = c_space_obstruction(half(0.7), 1.0, e0, 0, 200);
  CHECK(c.holds == Holds::Yes);
  CHECK(c.scalars.at("final_deviation") < 1e-3);
  CHECK(c.scalars.at("ratio_bound_every_n") == 1.0);
  CHECK(c.scalars.at("ratio_lower_bound") == doctest::Approx(0.5));
  CHECK(c.traces.at("ratio").size() == 200);
}

TEST_CASE("obstruction is not asserted for positive recurrent walks") {
  const FinSeq e0 = FinSeq::unit(Lattice::HalfLine, 0);
  const Certificate c = c_space_obstruction(half(0.3), 1.0, e0, 0, 200);
  CHECK(c.holds == Holds::Undetermined);
  CHECK(c_space_obstruction(half(0.7), 0.0, e0, 0, 10).holds == Holds::Undetermined);
  CHECK_THROWS_AS(c_space_obstruction(half(0.7), 1.0, e0, 0, 0), std::invalid_argument);
}

TEST_CASE("lower bound for the walk on the line") {
  for (double p : {0.2, 0.7}) {
    const BandedOp w(Lattice::Line, PSeq::constant(p));
    const FinSeq x(Lattice::Line, -2, {1.0, -0.5, 2.0, 0.25});
    for (const SpaceSpec& s : {SpaceSpec::c0(), SpaceSpec::lq(1), SpaceSpec::lq(2)}) {
      const Certificate c = line_walk_lower_bound(w, x, 20, s);
      CHECK(c.holds == Holds::Yes);
      CHECK(c.scalars.at("lambda_threshold") == doctest::Approx(1.0 / std::abs(1 - 2 * p)));
    }
  }
  const FinSeq e0 = FinSeq::unit(Lattice::Line, 0);
  CHECK_THROWS_AS(line_walk_lower_bound(BandedOp(Lattice::Line, PSeq::constant(0.5)), e0, 3,
                                        SpaceSpec::c0()),
                  std::invalid_argument);
  CHECK_THROWS_AS(line_walk_lower_bound(half(0.7), FinSeq::unit(Lattice::HalfLine, 0), 3,
                                        SpaceSpec::c0()),
                  std::invalid_argument);
}

TEST_CASE("projective probe ignores the scale of x") {
  const BandedOp w = half(0.75);
  const FinSeq x(Lattice::HalfLine, 0, {1.0, 0.5, -0.25});
  const std::vector<FinSeq> targets = {FinSeq::unit(Lattice::HalfLine, 0),
                                       FinSeq(Lattice::HalfLine, 0, {1.0, -1.0})};
  const auto a = orbit_density_probe(w, x, targets, SpaceSpec::lq(2), 60, true);
  const auto b = orbit_density_probe(w, Complex(2.0, -3.0) * x, targets, SpaceSpec::lq(2), 60, true);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    for (std::size_t n = 0; n < a.targets[t].distances.size(); ++n) {
      CHECK(std::abs(a.targets[t].distances[n] - b.targets[t].distances[n]) < 1e-10);
      CHECK(std::isfinite(a.targets[t].distances[n]));
    }
  }
  CHECK(a.orbit_norms.size() == 61);
}

TEST_CASE("positive orbits stay away from sign-changing targets") {
  const auto r = orbit_density_probe(half(0.3), FinSeq::unit(Lattice::HalfLine, 0),
                                     {FinSeq(Lattice::HalfLine, 0, {1.0, -1.0})}, SpaceSpec::c0(),
                                     300, true);
  CHECK(r.targets[0].min_distance >= 0.5);
  CHECK(r.hit_times.empty());
}

TEST_CASE("lower density estimate") {
  std::vector<int> all;
  std::vector<int> even;
  for (int n = 1; n <= 100; ++n) {
    all.push_back(n);
    if (n % 2 == 0) even.push_back(n);
  }
  CHECK(lower_density_estimate(all, 100) == 1.0);
  CHECK(lower_density_estimate({}, 100) == 0.0);
  CHECK(lower_density_estimate(even, 100) == doctest::Approx(0.5).epsilon(0.02));
  // Hits only early: the trailing window sees the decay.
  CHECK(lower_density_estimate({1, 2, 3}, 100) == doctest::Approx(0.03));
  CHECK_THROWS_AS(lower_density_estimate({101}, 100), std::invalid_argument);
  CHECK_THROWS_AS(lower_density_estimate({}, 0), std::invalid_argument);
}

TEST_CASE("scenarios are well formed") {
  const auto& s = open_question_scenarios();
  CHECK(s.size() >= 4);
  for (const auto& sc : s) {
    CHECK_NOTHROW(PSeq::parse(sc.pseq));
    CHECK_NOTHROW(SpaceSpec::parse(sc.space));
    CHECK_FALSE(sc.question.empty());
  }
}
