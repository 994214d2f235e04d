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

#include "rucb/quantum.hpp"

using namespace rucb;

namespace {

const Vec2 kX0{std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};

ComplexMatrix pauli_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }

}  // namespace

TEST_CASE("QubitState rejects invalid density operators") {
  CHECK_THROWS_AS(QubitState(ComplexMatrix(2, {0.6, 0.0, 0.0, 0.6})), InvalidState);  // trace
  CHECK_THROWS_AS(QubitState(ComplexMatrix(2, {1.5, 0.0, 0.0, -0.5})), InvalidState);  // negative
  CHECK_THROWS_AS(QubitState(ComplexMatrix(2, {0.5, 0.3, 0.1, 0.5})), InvalidState);  // non-Herm
  CHECK_NOTHROW(QubitState(ComplexMatrix(2, {0.5, cplx(0.0, -0.5), cplx(0.0, 0.5), 0.5})));
}

TEST_CASE("Povm validates completeness, bounds and labels") {
  const ComplexMatrix p0(2, {1.0, 0.0, 0.0, 0.0});
  const ComplexMatrix p1(2, {0.0, 0.0, 0.0, 1.0});
  CHECK_NOTHROW(Povm({p0, p1}, {"0", "1"}));
  CHECK_THROWS_WITH_AS(Povm({p0, p0}, {"0", "1"}), doctest::Contains("completeness"),
                       InvalidState);
  CHECK_THROWS_AS(Povm({p0, p1}, {"0", "0"}), InvalidState);  // duplicate labels
  const ComplexMatrix big(2, {2.0, 0.0, 0.0, 0.0});
  const ComplexMatrix neg(2, {-1.0, 0.0, 0.0, 1.0});
  CHECK_THROWS_AS(Povm({big, neg}, {"0", "1"}), InvalidState);  // effect out of [0, I]
}

TEST_CASE("channel constructors validate their invariants") {
  CHECK_THROWS_AS(RandomUnitaryChannel({{0.5, ComplexMatrix::identity(2)}}), InvalidChannel);
  CHECK_THROWS_AS(RandomUnitaryChannel({{1.0, ComplexMatrix(2, {1.0, 0.0, 0.0, 2.0})}}),
                  InvalidChannel);
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix(2, {1.0, 0.0, 0.0, 0.5})}), InvalidChannel);
  CHECK_NOTHROW(KrausChannel({ComplexMatrix::identity(2)}));
}

TEST_CASE("choi of the identity channel") {
  const ChoiMatrix j = choi(RandomUnitaryChannel::identity());
  CHECK(j.matrix().trace().real() == doctest::Approx(2.0).epsilon(1e-15));
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      const bool corner = (i == 0 || i == 3) && (k == 0 || k == 3);
      CHECK(std::abs(j.matrix().at(i, k) - (corner ? cplx(1.0) : cplx(0.0))) < 1e-15);
    }
  }
}

TEST_CASE("choi of a bit-flip mixture is the weighted sum of the pure parts") {
  const double p = 0.3;
  const RandomUnitaryChannel flip({{1.0 - p, ComplexMatrix::identity(2)}, {p, pauli_x()}});
  const ChoiMatrix j = choi(flip);
  const ComplexMatrix expected =
      (1.0 - p) * choi(RandomUnitaryChannel::identity()).matrix() +
      p * choi(RandomUnitaryChannel::single(pauli_x())).matrix();
  CHECK(max_abs_diff(j.matrix(), expected) < 1e-15);
}

TEST_CASE("choi is affine in channel mixtures") {
  Rng rng(42);
  for (int k = 0; k < 50; ++k) {
    const RandomUnitaryChannel c1 = sample_ru_channel(rng, 2);
    const RandomUnitaryChannel c2 = sample_ru_channel(rng, 3);
    const double p = rng.uniform();
    std::vector<RandomUnitaryChannel::Term> mixed;
    for (const auto& [w, u] : c1.terms()) mixed.emplace_back(p * w, u);
    for (const auto& [w, u] : c2.terms()) mixed.emplace_back((1.0 - p) * w, u);
    const ComplexMatrix lhs = choi(RandomUnitaryChannel(mixed)).matrix();
    const ComplexMatrix rhs = p * choi(c1).matrix() + (1.0 - p) * choi(c2).matrix();
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("choi of the measure-and-prepare channel satisfies the Choi invariants") {
  const ChoiMatrix j = choi(measure_and_prepare_phi());  // ctor checks PSD, trace, tr_2
  CHECK(j.matrix().trace().real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(max_abs_diff(partial_trace(j.matrix(), Subsystem::second), ComplexMatrix::identity(2)) <
        1e-12);
}

TEST_CASE("process_effect frozen values") {
  const ChannelMeasurement meas(QubitState::basis(0),
                                Povm::projective({1.0, 0.0}, "m0", "m1"));
  const ProcessEffect eff = process_effect(meas, "m0");
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const cplx want = (i == 0 && j == 0) ? 1.0 : 0.0;
      CHECK(std::abs(eff.matrix().at(i, j) - want) < 1e-15);
    }
  }
  CHECK_THROWS_AS(process_effect(meas, "nope"), UnknownOutcome);
}

TEST_CASE("process_effect transposes the input factor in the computational basis") {
  // +y eigenstate: transpose flips the off-diagonal signs
  const ComplexMatrix rho(2, {0.5, cplx(0.0, -0.5), cplx(0.0, 0.5), 0.5});
  const ComplexMatrix rho_t(2, {0.5, cplx(0.0, 0.5), cplx(0.0, -0.5), 0.5});
  const ChannelMeasurement meas(QubitState(rho), Povm::projective({1.0, 0.0}, "m0", "m1"));
  const ComplexMatrix e = meas.povm().effect("m0");
  CHECK(max_abs_diff(process_effect(meas, "m0").matrix(), kron(rho_t, e)) == 0.0);
}

TEST_CASE("process effects sum to input^T tensor I and stay within [0, I]") {
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    const ChannelMeasurement meas(sample_state(rng), sample_binary_povm(rng));
    ComplexMatrix sum(4);
    for (const std::string& l : meas.povm().labels()) {
      const ProcessEffect eff = process_effect(meas, l);  // ctor checks 0 <= X <= I
      sum = sum + eff.matrix();
    }
    const ComplexMatrix want = kron(meas.input().matrix().transpose(), ComplexMatrix::identity(2));
    CHECK(max_abs_diff(sum, want) < 1e-12);
  }
}

TEST_CASE("outcome_probability frozen values") {
  const ChannelMeasurement meas(QubitState::basis(0),
                                Povm::projective({1.0, 0.0}, "0", "1"));
  CHECK(outcome_probability(RandomUnitaryChannel::identity(), meas, "0") ==
        doctest::Approx(1.0).epsilon(1e-14));

  const RandomUnitaryChannel flip({{0.7, ComplexMatrix::identity(2)}, {0.3, pauli_x()}});
  CHECK(outcome_probability(flip, meas, "1") == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("outcome_probability agrees with direct channel application") {
  Rng rng(1000);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const ChannelMeasurement meas(sample_state(rng), sample_binary_povm(rng));
    const RandomUnitaryChannel ch = sample_ru_channel(rng, 1 + static_cast<int>(rng.uniform() * 3));
    const QubitState out = apply_channel(ch, meas.input());
    double total = 0.0;
    for (const std::string& l : meas.povm().labels()) {
      const double p_choi = outcome_probability(ch, meas, l);
      const double p_direct = (meas.povm().effect(l) * out.matrix()).trace().real();
      worst = std::max(worst, std::abs(p_choi - p_direct));
      total += p_choi;
    }
    CHECK(std::abs(total - 1.0) < 1e-10);
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("apply_channel frozen values") {
  const QubitState zero = QubitState::basis(0);
  const QubitState one = QubitState::basis(1);
  CHECK(max_abs_diff(apply_channel(RandomUnitaryChannel::identity(), zero).matrix(),
                     zero.matrix()) == 0.0);

  const KrausChannel phi = measure_and_prepare_phi();
  CHECK(max_abs_diff(apply_channel(phi, zero).matrix(), zero.matrix()) < 1e-15);
  CHECK(max_abs_diff(apply_channel(phi, one).matrix(), ComplexMatrix::dyad(kX0)) < 1e-15);
}

TEST_CASE("measure_and_prepare channel is sharp on both target measurements") {
  const KrausChannel phi = measure_and_prepare_phi();
  ComplexMatrix sum(2);
  for (const ComplexMatrix& k : phi.kraus()) sum = sum + k.adjoint() * k;
  CHECK(max_abs_diff(sum, ComplexMatrix::identity(2)) < 1e-15);

  const ChannelMeasurement t1(QubitState::basis(0), Povm::projective({1.0, 0.0}, "m0", "m1"));
  const ChannelMeasurement t2(QubitState::basis(1), Povm::projective(kX0, "n0", "n1"));
  CHECK(outcome_probability(phi, t1, "m0") == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(outcome_probability(phi, t2, "n0") == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("samplers produce valid objects") {
  Rng rng(42);
  for (int k = 0; k < 100; ++k) {
    const QubitState s = sample_state(rng);  // ctor enforces trace/PSD
    CHECK(std::abs(s.matrix().trace().real() - 1.0) < 1e-10);

    const ComplexMatrix u = sample_unitary(rng);
    CHECK(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(2)) < 1e-10);

    CHECK_NOTHROW(sample_binary_povm(rng));
    CHECK_NOTHROW(sample_ru_channel(rng, 3));
  }
}

TEST_CASE("fixed seed reproduces bit-identical streams") {
  Rng a(42), b(42);
  for (int k = 0; k < 500; ++k) {
    CHECK(a.uniform() == b.uniform());
  }
  Rng c(42), d(42);
  for (int k = 0; k < 20; ++k) {
    CHECK(max_abs_diff(sample_state(c).matrix(), sample_state(d).matrix()) == 0.0);
    CHECK(max_abs_diff(sample_unitary(c), sample_unitary(d)) == 0.0);
  }
  // the split function is pure and spreads indices
  CHECK(Rng::child_seed(42, 0) == Rng::child_seed(42, 0));
  CHECK(Rng::child_seed(42, 0) != Rng::child_seed(42, 1));
  CHECK(Rng::child_seed(42, 0) != Rng::child_seed(43, 0));
}

TEST_CASE("channel measurement ignores an optional ancilla state") {
  const ChannelMeasurement plain(QubitState::basis(0), Povm::projective({1.0, 0.0}, "a", "b"));
  const ChannelMeasurement with_anc(QubitState::basis(0), Povm::projective({1.0, 0.0}, "a", "b"),
                                    QubitState::maximally_mixed());
  CHECK(outcome_probability(RandomUnitaryChannel::identity(), plain, "a") ==
        outcome_probability(RandomUnitaryChannel::identity(), with_anc, "a"));
}
