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

#include "rucb/fef.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace rucb {

namespace {

const ComplexMatrix& pauli(int i) {
  static const std::array<ComplexMatrix, 3> sigma{
      ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}),
      ComplexMatrix(2, {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}),
      ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}),
  };
  return sigma[static_cast<size_t>(i)];
}

void validate_two_qubit_state(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw InvalidState("two-qubit state must be 4x4");
  if (!rho.is_hermitian()) throw InvalidState("two-qubit state must be Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > kQuantumTol ||
      std::abs(rho.trace().imag()) > kQuantumTol) {
    throw InvalidState("two-qubit state must have unit trace");
  }
  const SpectralSummary s = eig_hermitian(rho);
  if (s.eigenvalues.back() < -kQuantumTol) {
    throw InvalidState("two-qubit state must be positive semidefinite");
  }
}

}  // namespace

std::string to_string(FefMethod m) {
  switch (m) {
    case FefMethod::general:
      return "general";
    case FefMethod::two_product_mixture:
      return "two-product-mixture";
    case FefMethod::product:
      return "product";
    case FefMethod::numeric:
      return "numeric";
  }
  return "unknown";
}

const ComplexMatrix& bell_projector() {
  static const ComplexMatrix p = [] {
    const std::array<cplx, 4> bell{std::numbers::sqrt2 / 2.0, 0.0, 0.0, std::numbers::sqrt2 / 2.0};
    return ComplexMatrix::dyad(bell);
  }();
  return p;
}

CorrelationMatrix correlation_matrix(const ComplexMatrix& rho) {
  validate_two_qubit_state(rho);
  CorrelationMatrix out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const cplx t = 0.25 * (rho * kron(pauli(i), pauli(j))).trace();
      if (std::abs(t.imag()) > 1e-12) {
        throw InvalidState("correlation entries must be real for a Hermitian state");
      }
      out.entries(i, j) = t.real();
    }
  }
  return out;
}

FefResult fef_general(const ComplexMatrix& rho) {
  static const Mat3 bell_corr = correlation_matrix(bell_projector()).entries;
  const Mat3 m = correlation_matrix(rho).entries;
  return {0.25 + 4.0 * ky_fan_norm(m.transpose() * bell_corr), FefMethod::general, std::nullopt};
}

FefResult fef_two_product_mixture(double r, const QubitState& rho_a, const QubitState& rho_b,
                                  const QubitState& tau_a, const QubitState& tau_b) {
  if (!(r >= 0.0 && r <= 1.0)) throw InvalidProbability("mixing weight must lie in [0, 1]");

  const SpectralSummary sra = eig_hermitian(rho_a.matrix());
  const SpectralSummary srb = eig_hermitian(rho_b.matrix());
  const SpectralSummary sta = eig_hermitian(tau_a.matrix());
  const SpectralSummary stb = eig_hermitian(tau_b.matrix());

  const double u = r * sra.delta * srb.delta;
  const double v = (1.0 - r) * sta.delta * stb.delta;

  // Bloch components of the rotated top eigenvector of tau_X: the frame
  // where rho_X is diagonal leaves only the (1, 3) components, fixed by
  // the overlap with the top eigenvector of rho_X.
  auto b13 = [](const SpectralSummary& rho, const SpectralSummary& tau) {
    const double a = std::min(1.0, overlap_abs(rho.max_eigvec, tau.max_eigvec));
    const double s = std::sqrt(std::max(0.0, 1.0 - a * a));
    return std::array<double, 2>{2.0 * a * s, 2.0 * a * a - 1.0};
  };
  const auto [ba1, ba3] = b13(sra, sta);
  const auto [bb1, bb3] = b13(srb, stb);

  // rotated correlation matrix is sparse: only these four entries survive
  const double m11 = 0.25 * v * ba1 * bb1;
  const double m13 = 0.25 * v * ba1 * bb3;
  const double m31 = 0.25 * v * ba3 * bb1;
  const double m33 = 0.25 * (u + v * ba3 * bb3);

  const double x = m11 * m11 + m31 * m31;
  const double y = m11 * m13 + m31 * m33;
  const double z = m13 * m13 + m33 * m33;

  return {0.25 + ky_fan_sparse(x, y, z), FefMethod::two_product_mixture, std::nullopt};
}

FefResult fef_product(const QubitState& rho_a, const QubitState& rho_b) {
  const double da = eig_hermitian(rho_a.matrix()).delta;
  const double db = eig_hermitian(rho_b.matrix()).delta;
  return {0.25 + 0.25 * da * db, FefMethod::product, std::nullopt};
}

FefResult fef_numeric(const ComplexMatrix& rho, const OptimizerOptions& opts) {
  validate_two_qubit_state(rho);
  const auto objective = [&rho](const std::array<double, 3>& angles) {
    const ComplexMatrix u = unitary_from_angles(angles[0], angles[1], angles[2]);
    // (I x U)|psi+> = (u00, u10, u01, u11)/sqrt(2)
    const std::array<cplx, 4> w{u.at(0, 0), u.at(1, 0), u.at(0, 1), u.at(1, 1)};
    return 0.5 * expectation(rho, w);
  };
  const UnitarySearchResult best = maximize_over_unitaries(objective, opts);
  return {best.value, FefMethod::numeric, best.unitary};
}

ComplexMatrix two_product_mixture_state(double r, const QubitState& rho_a,
                                        const QubitState& rho_b, const QubitState& tau_a,
                                        const QubitState& tau_b) {
  if (!(r >= 0.0 && r <= 1.0)) throw InvalidProbability("mixing weight must lie in [0, 1]");
  return r * kron(rho_a.matrix(), rho_b.matrix()) +
         (1.0 - r) * kron(tau_a.matrix(), tau_b.matrix());
}

}  // namespace rucb
