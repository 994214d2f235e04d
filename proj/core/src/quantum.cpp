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

#include "rucb/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace rucb {

namespace {

const Vec2 kX0{std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};

void require_hermitian(const ComplexMatrix& m, const char* what) {
  if (!m.is_hermitian()) throw InvalidState(std::string(what) + ": matrix is not Hermitian");
}

}  // namespace

// ---------------------------------------------------------------------------
// QubitState

QubitState::QubitState(const ComplexMatrix& m) : m_(m) {
  if (m.dim() != 2) throw InvalidState("qubit state must be 2x2");
  require_hermitian(m, "qubit state");
  if (std::abs(m.trace().real() - 1.0) > kQuantumTol || std::abs(m.trace().imag()) > kQuantumTol) {
    throw InvalidState("qubit state must have unit trace");
  }
  const SpectralSummary s = eig_hermitian(m);
  if (s.eigenvalues.back() < -kQuantumTol) {
    throw InvalidState("qubit state must be positive semidefinite");
  }
}

QubitState QubitState::pure(const Vec2& v) {
  if (std::abs(vec_norm(v) - 1.0) > kQuantumTol) {
    throw InvalidState("pure state vector must be normalized");
  }
  return QubitState(ComplexMatrix::dyad(v));
}

QubitState QubitState::basis(int k) {
  if (k != 0 && k != 1) throw InvalidState("basis index must be 0 or 1");
  return pure(k == 0 ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0});
}

QubitState QubitState::maximally_mixed() {
  return QubitState(0.5 * ComplexMatrix::identity(2));
}

// ---------------------------------------------------------------------------
// Povm

Povm::Povm(std::vector<ComplexMatrix> effects, std::vector<std::string> labels)
    : effects_(std::move(effects)), labels_(std::move(labels)) {
  if (effects_.empty()) throw InvalidState("POVM needs at least one effect");
  if (effects_.size() != labels_.size()) {
    throw InvalidState("POVM effect/label count mismatch");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw InvalidState("POVM labels must be unique");

  ComplexMatrix sum(2);
  for (const ComplexMatrix& e : effects_) {
    if (e.dim() != 2) throw InvalidState("POVM effects must be 2x2");
    require_hermitian(e, "POVM effect");
    const SpectralSummary s = eig_hermitian(e);
    if (s.eigenvalues.back() < -kQuantumTol || s.eigenvalues.front() > 1.0 + kQuantumTol) {
      throw InvalidState("POVM effect must satisfy 0 <= E <= I");
    }
    sum = sum + e;
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(2)) > kQuantumTol) {
    throw InvalidState("POVM completeness violated: effects do not sum to identity");
  }
}

Povm Povm::projective(const Vec2& v, std::string label0, std::string label1) {
  if (std::abs(vec_norm(v) - 1.0) > kQuantumTol) {
    throw InvalidState("projective POVM vector must be normalized");
  }
  const ComplexMatrix p = ComplexMatrix::dyad(v);
  return Povm({p, ComplexMatrix::identity(2) - p}, {std::move(label0), std::move(label1)});
}

size_t Povm::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw UnknownOutcome("unknown POVM outcome label '" + label + "'");
}

const ComplexMatrix& Povm::effect(const std::string& label) const {
  return effects_[index_of(label)];
}

ComplexMatrix Povm::effect_sum(const std::vector<std::string>& labels) const {
  ComplexMatrix sum(2);
  for (const std::string& l : labels) sum = sum + effect(l);
  return sum;
}

// ---------------------------------------------------------------------------
// Channels

RandomUnitaryChannel::RandomUnitaryChannel(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw InvalidChannel("random unitary channel needs at least one term");
  double wsum = 0.0;
  for (const auto& [w, u] : terms_) {
    if (w < 0.0) throw InvalidChannel("mixture weights must be nonnegative");
    wsum += w;
    if (u.dim() != 2) throw InvalidChannel("unitaries must be 2x2");
    if (max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(2)) > kQuantumTol) {
      throw InvalidChannel("channel term is not unitary");
    }
  }
  if (std::abs(wsum - 1.0) > kQuantumTol) {
    throw InvalidChannel("mixture weights must sum to one");
  }
}

RandomUnitaryChannel RandomUnitaryChannel::identity() {
  return single(ComplexMatrix::identity(2));
}

RandomUnitaryChannel RandomUnitaryChannel::single(const ComplexMatrix& u) {
  return RandomUnitaryChannel({{1.0, u}});
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw InvalidChannel("Kraus channel needs at least one operator");
  ComplexMatrix sum(2);
  for (const ComplexMatrix& k : kraus_) {
    if (k.dim() != 2) throw InvalidChannel("Kraus operators must be 2x2");
    sum = sum + k.adjoint() * k;
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(2)) > kQuantumTol) {
    throw InvalidChannel("Kraus operators are not trace preserving");
  }
}

// ---------------------------------------------------------------------------
// ChoiMatrix / ChannelMeasurement / ProcessEffect

ChoiMatrix::ChoiMatrix(const ComplexMatrix& m) : m_(m) {
  if (m.dim() != 4) throw InvalidChannel("Choi matrix must be 4x4");
  if (!m.is_hermitian()) throw InvalidChannel("Choi matrix must be Hermitian");
  const SpectralSummary s = eig_hermitian(m);
  if (s.eigenvalues.back() < -kQuantumTol) {
    throw InvalidChannel("Choi matrix must be positive semidefinite");
  }
  if (std::abs(m.trace().real() - 2.0) > kQuantumTol) {
    throw InvalidChannel("Choi matrix must have trace 2");
  }
  if (max_abs_diff(partial_trace(m, Subsystem::second), ComplexMatrix::identity(2)) > kQuantumTol) {
    throw InvalidChannel("Choi matrix must be trace preserving (tr_2 = I)");
  }
}

ChannelMeasurement::ChannelMeasurement(QubitState input, Povm povm,
                                       std::optional<QubitState> /*ancilla*/)
    : input_(std::move(input)), povm_(std::move(povm)) {}

ProcessEffect::ProcessEffect(const ComplexMatrix& m) : m_(m) {
  if (m.dim() != 4) throw InvalidState("process effect must be 4x4");
  if (!m.is_hermitian()) throw InvalidState("process effect must be Hermitian");
  const SpectralSummary s = eig_hermitian(m);
  if (s.eigenvalues.back() < -kQuantumTol || s.eigenvalues.front() > 1.0 + kQuantumTol) {
    throw InvalidState("process effect must satisfy 0 <= X <= I");
  }
}

// ---------------------------------------------------------------------------
// Operations

namespace {

// J = sum_k (I tensor K_k) |psi'+><psi'+| (I tensor K_k)^dag with
// |psi'+> = (1,0,0,1); equivalently J[2i+k][2j+l] = sum K|i><j|K^dag [k][l].
ComplexMatrix choi_from_ops(const std::vector<std::pair<double, ComplexMatrix>>& weighted_ops) {
  std::vector<cplx> e(16, 0.0);
  for (const auto& [w, k] : weighted_ops) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int r = 0; r < 2; ++r) {
          for (int c = 0; c < 2; ++c) {
            e[static_cast<size_t>((2 * i + r) * 4 + (2 * j + c))] +=
                w * k.at(r, i) * std::conj(k.at(c, j));
          }
        }
      }
    }
  }
  return ComplexMatrix(4, std::span<const cplx>(e));
}

double born_probability(const ChoiMatrix& j, const ChannelMeasurement& meas,
                        const std::string& outcome) {
  const ProcessEffect eff = process_effect(meas, outcome);
  double p = (eff.matrix() * j.matrix()).trace().real();
  if (p < -kQuantumTol || p > 1.0 + kQuantumTol) {
    throw InvalidChannel("outcome probability outside [0, 1] beyond tolerance");
  }
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

ChoiMatrix choi(const RandomUnitaryChannel& channel) {
  std::vector<std::pair<double, ComplexMatrix>> ops;
  ops.reserve(channel.terms().size());
  for (const auto& [w, u] : channel.terms()) ops.emplace_back(w, u);
  return ChoiMatrix(choi_from_ops(ops));
}

ChoiMatrix choi(const KrausChannel& channel) {
  std::vector<std::pair<double, ComplexMatrix>> ops;
  ops.reserve(channel.kraus().size());
  for (const ComplexMatrix& k : channel.kraus()) ops.emplace_back(1.0, k);
  return ChoiMatrix(choi_from_ops(ops));
}

ProcessEffect process_effect(const ChannelMeasurement& meas, const std::string& outcome) {
  const ComplexMatrix& e = meas.povm().effect(outcome);
  return ProcessEffect(kron(meas.input().matrix().transpose(), e));
}

double outcome_probability(const RandomUnitaryChannel& channel, const ChannelMeasurement& meas,
                           const std::string& outcome) {
  return born_probability(choi(channel), meas, outcome);
}

double outcome_probability(const KrausChannel& channel, const ChannelMeasurement& meas,
                           const std::string& outcome) {
  return born_probability(choi(channel), meas, outcome);
}

QubitState apply_channel(const RandomUnitaryChannel& channel, const QubitState& state) {
  ComplexMatrix out(2);
  for (const auto& [w, u] : channel.terms()) {
    out = out + w * (u * state.matrix() * u.adjoint());
  }
  return QubitState(out);
}

QubitState apply_channel(const KrausChannel& channel, const QubitState& state) {
  ComplexMatrix out(2);
  for (const ComplexMatrix& k : channel.kraus()) {
    out = out + k * state.matrix() * k.adjoint();
  }
  return QubitState(out);
}

KrausChannel measure_and_prepare_phi() {
  const Vec2 zero{1.0, 0.0};
  const Vec2 one{0.0, 1.0};
  return KrausChannel({ComplexMatrix::dyad(zero), ComplexMatrix::outer(kX0, one)});
}

// ---------------------------------------------------------------------------
// Samplers

QubitState sample_state(Rng& rng) {
  std::array<cplx, 4> v;
  for (cplx& c : v) c = rng.gaussian_complex();
  const double n = vec_norm(v);
  for (cplx& c : v) c /= n;
  return QubitState(partial_trace(ComplexMatrix::dyad(v), Subsystem::second));
}

ComplexMatrix sample_unitary(Rng& rng) {
  // Gram-Schmidt on two Gaussian columns. Dividing each column by its
  // (real positive) norm is the phase convention that makes the implicit
  // R-diagonal real positive, so the result is Haar, not merely unitary.
  std::array<cplx, 2> c0{rng.gaussian_complex(), rng.gaussian_complex()};
  std::array<cplx, 2> c1{rng.gaussian_complex(), rng.gaussian_complex()};

  const double n0 = vec_norm(c0);
  for (cplx& c : c0) c /= n0;
  const cplx proj = inner(c0, c1);
  for (size_t i = 0; i < 2; ++i) c1[i] -= proj * c0[i];
  const double n1 = vec_norm(c1);
  for (cplx& c : c1) c /= n1;

  return ComplexMatrix(2, {c0[0], c1[0], c0[1], c1[1]});
}

Povm sample_binary_povm(Rng& rng) {
  const ComplexMatrix v = sample_unitary(rng);
  const double e0 = rng.uniform();
  const double e1 = rng.uniform();
  const ComplexMatrix d(2, {cplx(e0), 0.0, 0.0, cplx(e1)});
  const ComplexMatrix e = v * d * v.adjoint();
  return Povm({e, ComplexMatrix::identity(2) - e}, {"0", "1"});
}

RandomUnitaryChannel sample_ru_channel(Rng& rng, int k) {
  if (k < 1) throw InvalidChannel("channel term count must be positive");
  std::vector<double> w(static_cast<size_t>(k));
  double sum = 0.0;
  for (double& x : w) {
    x = -std::log(1.0 - rng.uniform());  // Exp(1); normalized = Dirichlet(1..1)
    sum += x;
  }
  std::vector<RandomUnitaryChannel::Term> terms;
  terms.reserve(w.size());
  for (double x : w) terms.emplace_back(x / sum, sample_unitary(rng));
  // renormalize exactly against accumulated rounding
  double tw = 0.0;
  for (const auto& t : terms) tw += t.first;
  for (auto& t : terms) t.first /= tw;
  return RandomUnitaryChannel(std::move(terms));
}

}  // namespace rucb
