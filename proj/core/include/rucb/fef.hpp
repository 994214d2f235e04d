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

#include "rucb/linalg.hpp"
#include "rucb/optimize.hpp"
#include "rucb/quantum.hpp"

namespace rucb {

/// Scaled Pauli correlation data of a two-qubit state:
/// entries(i, j) = (1/4) tr[rho (sigma_i tensor sigma_j)], all real and in
/// [-1/4, 1/4] for a valid state.
struct CorrelationMatrix {
  Mat3 entries;
};

/// How an FEF value was obtained.
enum class FefMethod { general, two_product_mixture, product, numeric };

std::string to_string(FefMethod m);

/// Fully entangled fraction of a two-qubit state: the largest overlap with
/// a maximally entangled state reachable by a unitary on the second qubit.
/// Always in [1/4, 1].
struct FefResult {
  double value = 0.0;
  FefMethod method = FefMethod::general;
  std::optional<ComplexMatrix> witness_unitary;  // numeric method only
};

/// Pauli correlation matrix of a valid two-qubit state (Hermitian, unit
/// trace, PSD within 1e-10); throws InvalidState otherwise.
CorrelationMatrix correlation_matrix(const ComplexMatrix& rho);

/// General two-qubit closed form
///   f = 1/4 + 4 || M(rho)^T M(P+) ||_KF
/// evaluated with the dense Ky Fan norm.
FefResult fef_general(const ComplexMatrix& rho);

/// Closed form for r rhoA x rhoB + (1-r) tauA x tauB, evaluated through
/// the sparse-Gram route: spectral spreads and top-eigenvector overlaps
/// feed the Gram entries of the rotated correlation matrix, whose Ky Fan
/// norm has the closed form ky_fan_sparse.
FefResult fef_two_product_mixture(double r, const QubitState& rho_a, const QubitState& rho_b,
                                  const QubitState& tau_a, const QubitState& tau_b);

/// Product-state closed form f = 1/4 + (1/4) spread(rhoA) spread(rhoB).
FefResult fef_product(const QubitState& rho_a, const QubitState& rho_b);

/// Independent numeric route: maximize <psi+| (I x U^dag) rho (I x U) |psi+>
/// over the three-angle unitary parametrization (grid + simplex). Returns
/// the best value and the maximizing unitary.
FefResult fef_numeric(const ComplexMatrix& rho, const OptimizerOptions& opts = {});

/// r rhoA x rhoB + (1-r) tauA x tauB as a 4x4 matrix.
ComplexMatrix two_product_mixture_state(double r, const QubitState& rho_a,
                                        const QubitState& rho_b, const QubitState& tau_a,
                                        const QubitState& tau_b);

/// The maximally entangled projector P+ = |psi+><psi+|.
const ComplexMatrix& bell_projector();

}  // namespace rucb
