// Copyright 2026 The rucbound developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rucb/bounds.hpp"

using namespace rucb;

namespace {

constexpr double kCPi = 0.8535533905932737;  // (1/2)(1 + 1/sqrt 2)
const Vec2 kX0{std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};

}  // namespace

TEST_CASE("scenario validation") {
  ChannelMeasurement t1(QubitState::basis(0), Povm::projective({1.0, 0.0}, "m0", "m1"));
  ChannelMeasurement t2(QubitState::basis(0), Povm::projective(kX0, "n0", "n1"));
  CHECK_THROWS_AS(Scenario(t1, t2, 1.5, {"m0"}, {"n0"}), InvalidProbability);
  CHECK_THROWS_AS(Scenario(t1, t2, 0.5, {"xx"}, {"n0"}), UnknownOutcome);
  CHECK_THROWS_AS(Scenario(t1, t2, 0.5, {"m0", "m0"}, {"n0"}), InvalidScenario);
  CHECK_NOTHROW(Scenario(t1, t2, 0.5, {}, {"n0", "n1"}));  // empty and full subsets are legal
}

TEST_CASE("z_norm frozen values") {
  CHECK(z_norm(example_scenario(1.0, 0.3)) == doctest::Approx(1.0).epsilon(1e-14));

  ChannelMeasurement t1(QubitState::basis(0), Povm::projective({1.0, 0.0}, "m0", "m1"));
  ChannelMeasurement t2(QubitState::basis(0), Povm::projective(kX0, "n0", "n1"));
  const Scenario full(t1, t2, 0.25, {"m0", "m1"}, {"n0", "n1"});
  CHECK(z_norm(full) == doctest::Approx(2.0).epsilon(1e-14));

  const Scenario empty_m(t1, t2, 1.0, {}, {"n0"});
  CHECK(z_norm(empty_m) == doctest::Approx(0.0));
}

TEST_CASE("bound_C on the built-in family") {
  const BoundReport at_pi = bound_C(example_scenario(std::numbers::pi, 0.5));
  CHECK(at_pi.C == doctest::Approx(kCPi).epsilon(1e-13));
  CHECK(at_pi.nontrivial);

  const BoundReport at_half = bound_C(example_scenario(std::numbers::pi / 2.0, 0.5));
  CHECK(std::abs(at_half.C - 1.0) < 1e-12);
  CHECK(std::abs(at_half.C - at_half.T) < 1e-12);
  CHECK_FALSE(at_half.nontrivial);

  // r = 1 with a pure input and a rank-one singleton: some unitary rotates
  // the input onto the measured eigenstate, so the bound is 1
  const BoundReport sharp = bound_C(example_scenario(0.7 * std::numbers::pi, 1.0));
  CHECK(sharp.C == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("bound_T frozen values") {
  CHECK(bound_T(example_scenario(std::numbers::pi, 0.5)) == doctest::Approx(1.0).epsilon(1e-13));

  ChannelMeasurement t1(QubitState::maximally_mixed(), Povm::projective({1.0, 0.0}, "m0", "m1"));
  ChannelMeasurement t2(QubitState::maximally_mixed(), Povm::projective(kX0, "n0", "n1"));
  const Scenario mixed_inputs(t1, t2, 0.4, {"m0"}, {"n0"});
  CHECK(bound_T(mixed_inputs) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("bound_T at r = 1 matches the scaled product-state FEF route") {
  Rng rng(301);
  for (int k = 0; k < 50; ++k) {
    ChannelMeasurement t1(sample_state(rng), sample_binary_povm(rng));
    ChannelMeasurement t2(sample_state(rng), sample_binary_povm(rng));
    const Scenario s(t1, t2, 1.0, {"0"}, {"0"});
    const ComplexMatrix em = s.effect_m();
    const double tr_e = em.trace().real();
    REQUIRE(tr_e > 1e-9);
    const QubitState effect_state((1.0 / tr_e) * em);
    // at r = 1 the effect-weighted state is a plain product, so
    // T = 2 Z f_product with Z = tr E(M)
    const double via_fef =
        2.0 * tr_e * fef_product(s.meas1().input().transposed(), effect_state).value;
    CHECK(bound_T(s) == doctest::Approx(via_fef).epsilon(1e-12));
  }
}

TEST_CASE("bound_C_pure_pvm frozen values and agreement with the assembled scenario") {
  const QubitState psi = QubitState::basis(0);
  const QubitState phi = QubitState::basis(1);  // theta = pi inputs
  CHECK(bound_C_pure_pvm(psi, phi, {1.0, 0.0}, kX0, 0.5) == doctest::Approx(kCPi).epsilon(1e-14));

  // equal overlaps saturate the trivial bound for any r
  const QubitState phi2 = QubitState::pure(kX0);
  CHECK(bound_C_pure_pvm(psi, phi2, {1.0, 0.0}, kX0, 0.3) == doctest::Approx(1.0).epsilon(1e-13));

  // both overlaps zero: the cross term alone carries the bound to 1
  CHECK(bound_C_pure_pvm(psi, phi, {1.0, 0.0}, {0.0, 1.0}, 0.5) ==
        doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(bound_C_pure_pvm(QubitState::maximally_mixed(), phi, {1.0, 0.0}, kX0, 0.5),
                  NotPure);
  CHECK_THROWS_AS(bound_C_pure_pvm(psi, phi, {2.0, 0.0}, kX0, 0.5), NotUnit);

  Rng rng(303);
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix u1 = sample_unitary(rng), u2 = sample_unitary(rng);
    const Vec2 psi_v{u1.at(0, 0), u1.at(1, 0)};
    const Vec2 phi_v{u1.at(0, 1), u1.at(1, 1)};
    const Vec2 em{u2.at(0, 0), u2.at(1, 0)};
    const Vec2 fn{u2.at(0, 1), u2.at(1, 1)};
    const double r = rng.uniform();
    // u1 columns are orthogonal; mix them for a generic input overlap
    const double th = rng.uniform(0.0, std::numbers::pi);
    const Vec2 phi_mix{std::cos(th / 2) * psi_v[0] + std::sin(th / 2) * phi_v[0],
                       std::cos(th / 2) * psi_v[1] + std::sin(th / 2) * phi_v[1]};
    const QubitState in1 = QubitState::pure(psi_v);
    const QubitState in2 = QubitState::pure(phi_mix);

    ChannelMeasurement t1(in1, Povm::projective(em, "m0", "m1"));
    ChannelMeasurement t2(in2, Povm::projective(fn, "n0", "n1"));
    const Scenario s(t1, t2, r, {"m0"}, {"n0"});
    CHECK(std::abs(bound_C_pure_pvm(in1, in2, em, fn, r) - bound_C(s).C) < 1e-12);
  }
}

TEST_CASE("nontrivial criterion on the built-in family") {
  CHECK(nontrivial(example_scenario(std::numbers::pi, 0.5)));
  CHECK_FALSE(nontrivial(example_scenario(std::numbers::pi / 2.0, 0.5)));
  CHECK_FALSE(nontrivial(example_scenario(std::numbers::pi, 1.0)));  // endpoint excluded
  CHECK_FALSE(nontrivial(example_scenario(std::numbers::pi, 0.0)));
}

TEST_CASE("lhs_value frozen values") {
  const Scenario s = example_scenario(std::numbers::pi, 0.5);
  CHECK(lhs_value(s, RandomUnitaryChannel::identity()) == doctest::Approx(0.75).epsilon(1e-14));

  // the measure-and-prepare channel is sharp on both subsets: it beats the
  // random unitary bound, which is the whole point of the comparison
  const double phi_lhs = lhs_value(s, measure_and_prepare_phi());
  CHECK(phi_lhs == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(phi_lhs > bound_C(s).C + 0.1);

  Rng rng(305);
  ChannelMeasurement t1(sample_state(rng), sample_binary_povm(rng));
  ChannelMeasurement t2(sample_state(rng), sample_binary_povm(rng));
  const Scenario full(t1, t2, 0.37, {"0", "1"}, {"0", "1"});
  CHECK(lhs_value(full, sample_ru_channel(rng, 3)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("brute force search reproduces the closed form") {
  const BruteForceResult ex = brute_force_C(example_scenario(std::numbers::pi, 0.5));
  CHECK(std::abs(ex.value - kCPi) < 1e-4);

  const BruteForceResult sharp = brute_force_C(example_scenario(0.3 * std::numbers::pi, 1.0));
  CHECK(std::abs(sharp.value - 1.0) < 1e-6);

  Rng rng(307);
  for (int k = 0; k < 20; ++k) {
    const Scenario s = sample_scenario(rng);
    const double c = bound_C(s).C;
    const double bf = brute_force_C(s).value;
    CHECK(std::abs(c - bf) < 1e-4);
  }
}

TEST_CASE("degenerate spreads leave the bound attainable (tie-break is irrelevant)") {
  Rng rng(309);
  // maximally mixed first input: spread(rho_in) = 0
  ChannelMeasurement t1(QubitState::maximally_mixed(), sample_binary_povm(rng));
  ChannelMeasurement t2(sample_state(rng), sample_binary_povm(rng));
  const Scenario s1(t1, t2, 0.45, {"0"}, {"0"});
  CHECK(std::abs(bound_C(s1).C - brute_force_C(s1).value) < 1e-4);

  // full first subset: E(M) = I, spread 0
  ChannelMeasurement t3(sample_state(rng), sample_binary_povm(rng));
  ChannelMeasurement t4(sample_state(rng), sample_binary_povm(rng));
  const Scenario s2(t3, t4, 0.45, {"0", "1"}, {"0"});
  CHECK(std::abs(bound_C(s2).C - brute_force_C(s2).value) < 1e-4);
}

TEST_CASE("soundness: no random unitary channel beats the bound") {
  Rng rng(311);
  double worst = -1.0;
  for (int k = 0; k < 200; ++k) {
    const Scenario s = sample_scenario(rng);
    const RandomUnitaryChannel ch = sample_ru_channel(rng, 1 + static_cast<int>(rng.uniform() * 3));
    worst = std::max(worst, lhs_value(s, ch) - bound_C(s).C);
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("no 3-term mixture beats the single-unitary maximum") {
  Rng rng(313);
  for (int k = 0; k < 10; ++k) {
    const Scenario s = sample_scenario(rng);
    const double single_max = brute_force_C(s).value;
    for (int j = 0; j < 10; ++j) {
      CHECK(lhs_value(s, sample_ru_channel(rng, 3)) <= single_max + 1e-6);
    }
  }
}

TEST_CASE("ordering and report invariants on random scenarios") {
  Rng rng(315);
  for (int k = 0; k < 300; ++k) {
    const Scenario s = sample_scenario(rng);
    const BoundReport rep = bound_C(s);
    CHECK(rep.C <= rep.T + 1e-10);
    CHECK(rep.Z >= -1e-12);
    CHECK(rep.Z <= 2.0 + 1e-12);
    CHECK(rep.C >= 0.5 * rep.Z - 1e-10);
    CHECK(rep.C <= rep.Z + 1e-10);
    CHECK(rep.nontrivial == (rep.C < rep.T - 1e-9));
  }
}

TEST_CASE("overlap criterion matches the C < T comparison on nondegenerate scenarios") {
  Rng rng(317);
  for (int k = 0; k < 100; ++k) {
    const Scenario s = sample_nondegenerate_scenario(rng);
    const BoundReport rep = bound_C(s);
    const bool gap = rep.C < rep.T - 1e-8;
    CHECK(nontrivial(s, 1e-8) == gap);
  }
}

TEST_CASE("the bound equals the scaled FEF of the effect-weighted state") {
  Rng rng(319);
  for (int k = 0; k < 100; ++k) {
    const Scenario s = sample_nondegenerate_scenario(rng);
    const ComplexMatrix em = s.effect_m();
    const ComplexMatrix fn = s.effect_n();
    const double tr_e = em.trace().real();
    const double tr_f = fn.trace().real();
    REQUIRE(tr_e > 1e-9);
    REQUIRE(tr_f > 1e-9);
    const double z = z_norm(s);
    const double big_r = s.r() * tr_e / z;
    const double f = fef_two_product_mixture(big_r, s.meas1().input().transposed(),
                                             QubitState((1.0 / tr_e) * em),
                                             s.meas2().input().transposed(),
                                             QubitState((1.0 / tr_f) * fn))
                         .value;
    CHECK(std::abs(bound_C(s).C - 2.0 * z * f) < 1e-10);
  }
}

TEST_CASE("example_sweep matches the closed-form curve at r = 1/2") {
  std::vector<double> grid;
  for (int k = 0; k < 64; ++k) grid.push_back(std::numbers::pi * k / 63.0);
  const std::vector<SweepPoint> pts = example_sweep(grid, 0.5);
  REQUIRE(pts.size() == 64);
  for (const SweepPoint& p : pts) {
    const double want = 0.5 + 0.5 * std::cos(p.theta / 2.0 - std::numbers::pi / 4.0);
    CHECK(std::abs(p.C - want) < 1e-12);
    CHECK(std::abs(p.T - 1.0) < 1e-12);
  }
  CHECK(pts.front().C == doctest::Approx(kCPi).epsilon(1e-13));  // theta = 0
  CHECK(pts.back().C == doctest::Approx(kCPi).epsilon(1e-13));   // theta = pi

  CHECK_THROWS_AS(example_sweep({-0.1}, 0.5), DomainError);
}

TEST_CASE("landau_pollak_check frozen values and random sweep") {
  const auto [l1, b1] = landau_pollak_check({1.0, 0.0}, {1.0, 0.0}, QubitState::basis(0));
  CHECK(l1 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(b1 == doctest::Approx(1.0).epsilon(1e-14));

  const auto [l2, b2] = landau_pollak_check({1.0, 0.0}, kX0, QubitState::basis(0));
  CHECK(b2 == doctest::Approx(kCPi).epsilon(1e-14));
  CHECK(l2 <= b2 + 1e-10);

  CHECK_THROWS_AS(landau_pollak_check({2.0, 0.0}, kX0, QubitState::basis(0)), NotUnit);

  Rng rng(321);
  for (int k = 0; k < 1000; ++k) {
    const ComplexMatrix u = sample_unitary(rng);
    const ComplexMatrix v = sample_unitary(rng);
    const auto [lhs, bound] = landau_pollak_check({u.at(0, 0), u.at(1, 0)},
                                                  {v.at(0, 0), v.at(1, 0)}, sample_state(rng));
    CHECK(lhs <= bound + 1e-10);
  }
}
