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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rucb/linalg.hpp"
#include "rucb/rng.hpp"

namespace rucb {

/// Validation tolerance for quantum-object invariants (trace, positivity,
/// completeness, unitarity).
inline constexpr double kQuantumTol = 1e-10;

/// Qubit density operator: 2x2 Hermitian, unit trace, positive
/// semidefinite (all within 1e-10). Throws InvalidState otherwise.
class QubitState {
 public:
  explicit QubitState(const ComplexMatrix& m);

  /// |v><v| from a unit vector (norm enforced within 1e-10).
  static QubitState pure(const Vec2& v);
  /// Computational basis state |k><k|, k in {0, 1}.
  static QubitState basis(int k);
  static QubitState maximally_mixed();

  const ComplexMatrix& matrix() const { return m_; }
  QubitState transposed() const { return QubitState(m_.transpose()); }

 private:
  ComplexMatrix m_;
};

/// Finite-outcome qubit POVM: effects 0 <= E <= I summing to the identity,
/// addressed by unique string labels.
class Povm {
 public:
  Povm(std::vector<ComplexMatrix> effects, std::vector<std::string> labels);

  /// Two-outcome projective measurement {|v><v|, I - |v><v|}.
  static Povm projective(const Vec2& v, std::string label0, std::string label1);

  size_t size() const { return effects_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const ComplexMatrix& effect(const std::string& label) const;
  const ComplexMatrix& effect_at(size_t i) const { return effects_[i]; }

  /// Sum of the effects selected by `labels` (empty sum is the zero
  /// matrix). Unknown labels throw UnknownOutcome.
  ComplexMatrix effect_sum(const std::vector<std::string>& labels) const;

 private:
  size_t index_of(const std::string& label) const;
  std::vector<ComplexMatrix> effects_;
  std::vector<std::string> labels_;
};

/// Convex mixture of unitary conjugations sum_x p_x U_x rho U_x^dag.
class RandomUnitaryChannel {
 public:
  using Term = std::pair<double, ComplexMatrix>;
  explicit RandomUnitaryChannel(std::vector<Term> terms);

  static RandomUnitaryChannel identity();
  static RandomUnitaryChannel single(const ComplexMatrix& u);

  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

/// General channel in Kraus form sum_k K rho K^dag with sum K^dag K = I.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> kraus);
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

 private:
  std::vector<ComplexMatrix> kraus_;
};

/// Unnormalized Choi matrix (trace 2): positive semidefinite with identity
/// partial trace over the output factor.
class ChoiMatrix {
 public:
  explicit ChoiMatrix(const ComplexMatrix& m);
  const ComplexMatrix& matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

/// Ancilla-free channel measurement: an input state fed through the
/// channel and a POVM on the output. An ancilla state may be supplied for
/// interface completeness; the outcome statistics never depend on it, so
/// it is accepted and ignored.
class ChannelMeasurement {
 public:
  ChannelMeasurement(QubitState input, Povm povm,
                     std::optional<QubitState> ancilla = std::nullopt);

  const QubitState& input() const { return input_; }
  const Povm& povm() const { return povm_; }

 private:
  QubitState input_;
  Povm povm_;
};

/// Process effect of an ancilla-free measurement: input^T tensor E, a 4x4
/// operator with 0 <= X <= I.
class ProcessEffect {
 public:
  explicit ProcessEffect(const ComplexMatrix& m);
  const ComplexMatrix& matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

/// Choi matrix of a channel: apply the channel to one half of the
/// unnormalized maximally entangled state sum_i |ii>.
ChoiMatrix choi(const RandomUnitaryChannel& channel);
ChoiMatrix choi(const KrausChannel& channel);

/// Process effect for one outcome of a measurement: input^T tensor E_m,
/// the transpose taken in the computational basis.
ProcessEffect process_effect(const ChannelMeasurement& meas, const std::string& outcome);

/// Outcome probability tr[(input^T tensor E_m) J_channel], clamped to
/// [0, 1]; values outside [-1e-10, 1 + 1e-10] indicate a broken channel or
/// measurement and throw InvalidChannel.
double outcome_probability(const RandomUnitaryChannel& channel, const ChannelMeasurement& meas,
                           const std::string& outcome);
double outcome_probability(const KrausChannel& channel, const ChannelMeasurement& meas,
                           const std::string& outcome);

/// Direct channel application (the simulation oracle for the Choi-based
/// probability rule).
QubitState apply_channel(const RandomUnitaryChannel& channel, const QubitState& state);
QubitState apply_channel(const KrausChannel& channel, const QubitState& state);

/// Measure-and-prepare channel with Kraus operators |0><0| and |x0><1|,
/// |x0> = (|0> + |1>)/sqrt(2): measures in the computational basis and
/// prepares |0> or |x0|. Not a random unitary channel.
KrausChannel measure_and_prepare_phi();

// --------------------------------------------------------------------------
// Seeded samplers for randomized verification. All draw exclusively from
// the passed Rng, so a seed pins the whole stream.

/// Mixed state: partial trace of a Haar-random two-qubit pure state.
QubitState sample_state(Rng& rng);

/// Haar-distributed 2x2 unitary via Gram-Schmidt on complex Gaussian
/// columns with the R-diagonal phase fix.
ComplexMatrix sample_unitary(Rng& rng);

/// Binary POVM {E, I - E} with E = V diag(e0, e1) V^dag, e uniform in
/// [0, 1], V Haar. Labels "0" and "1".
Povm sample_binary_povm(Rng& rng);

/// Random unitary channel with k Haar terms and uniform-Dirichlet weights.
RandomUnitaryChannel sample_ru_channel(Rng& rng, int k);

}  // namespace rucb
