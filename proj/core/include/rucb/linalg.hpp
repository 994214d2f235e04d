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

#include <array>
#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "rucb/errors.hpp"

namespace rucb {

using cplx = std::complex<double>;
using Vec2 = std::array<cplx, 2>;

/// Absolute tolerance for the Hermiticity flag. All operators in this
/// library are constructed, not measured, so the tolerance is tight.
inline constexpr double kHermitianTol = 1e-12;

/// Spectra closer than this are treated as fully degenerate; the reported
/// extremal eigenvectors are then snapped to a canonical basis vector so
/// that results are deterministic.
inline constexpr double kDegenerateTol = 1e-10;

/// Dense complex matrix of dimension 2, 3 or 4, row-major storage.
///
/// The Hermiticity flag is detected at construction (max |A_ij - conj(A_ji)|
/// <= 1e-12) and propagated by the arithmetic that preserves it. Matrices
/// are immutable values; builders assemble an entry vector and construct.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim);
  ComplexMatrix(int dim, std::initializer_list<cplx> row_major);
  ComplexMatrix(int dim, std::span<const cplx> row_major);

  static ComplexMatrix identity(int dim);
  /// Rank-one projector |v><v| from a (not necessarily normalized) vector.
  static ComplexMatrix dyad(std::span<const cplx> v);
  /// Outer product |u><v|.
  static ComplexMatrix outer(std::span<const cplx> u, std::span<const cplx> v);

  int dim() const noexcept { return dim_; }
  const cplx& at(int i, int j) const { return e_[idx(i, j)]; }
  bool is_hermitian() const noexcept { return hermitian_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  cplx trace() const;
  double frobenius_norm() const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(double s, const ComplexMatrix& a);
  friend ComplexMatrix operator*(const cplx& s, const ComplexMatrix& a);
  friend ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

  std::vector<cplx> apply(std::span<const cplx> v) const;

 private:
  ComplexMatrix(int dim, std::span<const cplx> row_major, bool hermitian_flag);
  int idx(int i, int j) const { return i * dim_ + j; }
  void detect_hermitian();
  void check_dim(int dim) const;

  int dim_;
  bool hermitian_ = false;
  std::array<cplx, 16> e_{};
};

/// Largest entrywise |a - b|; the matrices must share a dimension.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Real 3x3 matrix used for Pauli correlation data and Ky Fan norms.
struct Mat3 {
  std::array<double, 9> e{};

  double& operator()(int i, int j) { return e[static_cast<size_t>(3 * i + j)]; }
  const double& operator()(int i, int j) const { return e[static_cast<size_t>(3 * i + j)]; }

  static Mat3 identity();
  Mat3 transpose() const;

  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Mat3 operator*(double s, const Mat3& a);
  friend Mat3 operator+(const Mat3& a, const Mat3& b);
};

/// Full spectrum of a Hermitian matrix plus the extremal eigenvectors.
///
/// delta is the spectral spread (max minus min eigenvalue). Eigenvector
/// global phase is fixed so the first component above 1e-12 in magnitude is
/// real positive; for a fully degenerate spectrum (delta <= 1e-10) the
/// extremal eigenvectors are snapped to canonical basis vectors.
struct SpectralSummary {
  std::vector<double> eigenvalues;               // sorted descending
  std::vector<std::vector<cplx>> eigenvectors;   // index-matched, unsnapped
  std::vector<cplx> max_eigvec;                  // unit norm
  std::vector<cplx> min_eigvec;                  // unit norm
  double delta = 0.0;                            // eigenvalues.front() - eigenvalues.back()
};

/// Eigensolve a Hermitian matrix of dimension 2, 3 or 4.
///
/// 2x2 uses the trace/determinant closed form; 3x3 and 4x4 run cyclic
/// Jacobi sweeps until the off-diagonal Frobenius norm falls below 1e-12.
/// Throws NonHermitianInput if the matrix is not flagged Hermitian.
SpectralSummary eig_hermitian(const ComplexMatrix& a);

/// Ky Fan (trace) norm of a real 3x3 matrix: the sum of its singular
/// values, computed by one-sided Jacobi so that vanishing singular values
/// come out at working precision instead of sqrt(eps).
double ky_fan_norm(const Mat3& m);

/// Ky Fan norm sqrt(x + z + 2 sqrt(xz - y^2)) of any matrix M whose Gram
/// matrix M^T M has entries (1,1)=x, (1,3)=(3,1)=y, (3,3)=z and a vanishing
/// middle row and column. Small negative xz - y^2 (>= -1e-12) clamps to
/// zero; anything lower throws DomainError.
double ky_fan_sparse(double x, double y, double z);

/// Which tensor factor partial_trace removes.
enum class Subsystem { first, second };

/// Partial trace of a 4x4 matrix over one qubit factor, computational
/// basis ordering |i> x |j|  ->  index 2i + j.
ComplexMatrix partial_trace(const ComplexMatrix& a, Subsystem traced_out);

/// |<a|b>| for same-length complex vectors.
double overlap_abs(std::span<const cplx> a, std::span<const cplx> b);

/// <a|b> (conjugate-linear in the first argument).
cplx inner(std::span<const cplx> a, std::span<const cplx> b);

/// Euclidean norm.
double vec_norm(std::span<const cplx> v);

/// Re <v|A|v>.
double expectation(const ComplexMatrix& a, std::span<const cplx> v);

}  // namespace rucb
