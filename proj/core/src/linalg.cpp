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

#include "rucb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rucb {

namespace {

constexpr double kJacobiOffTol = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), hermitian_(true) {
  check_dim(dim);
}

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<cplx> row_major)
    : ComplexMatrix(dim, std::span<const cplx>(row_major.begin(), row_major.size())) {}

ComplexMatrix::ComplexMatrix(int dim, std::span<const cplx> row_major) : dim_(dim) {
  check_dim(dim);
  if (row_major.size() != static_cast<size_t>(dim * dim)) {
    throw DimensionError("entry count does not match matrix dimension");
  }
  std::copy(row_major.begin(), row_major.end(), e_.begin());
  detect_hermitian();
}

ComplexMatrix::ComplexMatrix(int dim, std::span<const cplx> row_major, bool hermitian_flag)
    : dim_(dim), hermitian_(hermitian_flag) {
  check_dim(dim);
  std::copy(row_major.begin(), row_major.end(), e_.begin());
}

void ComplexMatrix::check_dim(int dim) const {
  if (dim < 2 || dim > 4) {
    throw DimensionError("matrix dimension must be 2, 3 or 4");
  }
}

void ComplexMatrix::detect_hermitian() {
  double dev = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      dev = std::max(dev, std::abs(e_[idx(i, j)] - std::conj(e_[idx(j, i)])));
    }
  }
  hermitian_ = dev <= kHermitianTol;
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.e_[m.idx(i, i)] = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::dyad(std::span<const cplx> v) {
  return outer(v, v);
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> u, std::span<const cplx> v) {
  if (u.size() != v.size()) throw DimensionError("outer product needs equal lengths");
  const int dim = static_cast<int>(u.size());
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      m.e_[m.idx(i, j)] = u[static_cast<size_t>(i)] * std::conj(v[static_cast<size_t>(j)]);
    }
  }
  m.detect_hermitian();
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) m.e_[m.idx(i, j)] = std::conj(e_[idx(j, i)]);
  }
  m.hermitian_ = hermitian_;
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) m.e_[m.idx(i, j)] = e_[idx(j, i)];
  }
  m.detect_hermitian();
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(dim_);
  for (int i = 0; i < dim_ * dim_; ++i) m.e_[static_cast<size_t>(i)] = std::conj(e_[static_cast<size_t>(i)]);
  m.hermitian_ = hermitian_;
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim_; ++i) t += e_[idx(i, i)];
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (int i = 0; i < dim_ * dim_; ++i) s += std::norm(e_[static_cast<size_t>(i)]);
  return std::sqrt(s);
}

std::vector<cplx> ComplexMatrix::apply(std::span<const cplx> v) const {
  if (v.size() != static_cast<size_t>(dim_)) throw DimensionError("vector length mismatch");
  std::vector<cplx> out(static_cast<size_t>(dim_), 0.0);
  for (int i = 0; i < dim_; ++i) {
    cplx acc = 0.0;
    for (int j = 0; j < dim_; ++j) acc += e_[idx(i, j)] * v[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionError("dimension mismatch in +");
  ComplexMatrix m(a.dim_);
  for (int i = 0; i < a.dim_ * a.dim_; ++i) m.e_[static_cast<size_t>(i)] = a.e_[static_cast<size_t>(i)] + b.e_[static_cast<size_t>(i)];
  m.detect_hermitian();
  return m;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionError("dimension mismatch in -");
  ComplexMatrix m(a.dim_);
  for (int i = 0; i < a.dim_ * a.dim_; ++i) m.e_[static_cast<size_t>(i)] = a.e_[static_cast<size_t>(i)] - b.e_[static_cast<size_t>(i)];
  m.detect_hermitian();
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionError("dimension mismatch in *");
  ComplexMatrix m(a.dim_);
  for (int i = 0; i < a.dim_; ++i) {
    for (int j = 0; j < a.dim_; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < a.dim_; ++k) acc += a.e_[a.idx(i, k)] * b.e_[b.idx(k, j)];
      m.e_[m.idx(i, j)] = acc;
    }
  }
  m.detect_hermitian();
  return m;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) {
  ComplexMatrix m(a.dim_);
  for (int i = 0; i < a.dim_ * a.dim_; ++i) m.e_[static_cast<size_t>(i)] = s * a.e_[static_cast<size_t>(i)];
  m.hermitian_ = a.hermitian_;
  return m;
}

ComplexMatrix operator*(const cplx& s, const ComplexMatrix& a) {
  ComplexMatrix m(a.dim_);
  for (int i = 0; i < a.dim_ * a.dim_; ++i) m.e_[static_cast<size_t>(i)] = s * a.e_[static_cast<size_t>(i)];
  m.detect_hermitian();
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw DimensionError("kron expects two 2x2 factors");
  }
  std::array<cplx, 16> e{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          e[static_cast<size_t>((2 * i + k) * 4 + (2 * j + l))] = a.at(i, j) * b.at(k, l);
        }
      }
    }
  }
  return ComplexMatrix(4, std::span<const cplx>(e), a.is_hermitian() && b.is_hermitian());
}

ComplexMatrix partial_trace(const ComplexMatrix& a, Subsystem traced_out) {
  if (a.dim() != 4) throw DimensionError("partial_trace expects a 4x4 matrix");
  std::array<cplx, 4> e{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < 2; ++k) {
        if (traced_out == Subsystem::second) {
          acc += a.at(2 * i + k, 2 * j + k);
        } else {
          acc += a.at(2 * k + i, 2 * k + j);
        }
      }
      e[static_cast<size_t>(2 * i + j)] = acc;
    }
  }
  return ComplexMatrix(2, std::span<const cplx>(e));
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("dimension mismatch");
  double d = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a.at(i, j) - b.at(i, j)));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Mat3

Mat3 Mat3::identity() {
  Mat3 m;
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  return m;
}

Mat3 Mat3::transpose() const {
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = (*this)(j, i);
  }
  return m;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += a(i, k) * b(k, j);
      m(i, j) = acc;
    }
  }
  return m;
}

Mat3 operator*(double s, const Mat3& a) {
  Mat3 m;
  for (size_t i = 0; i < 9; ++i) m.e[i] = s * a.e[i];
  return m;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 m;
  for (size_t i = 0; i < 9; ++i) m.e[i] = a.e[i] + b.e[i];
  return m;
}

// ---------------------------------------------------------------------------
// Vector helpers

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  cplx acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double overlap_abs(std::span<const cplx> a, std::span<const cplx> b) {
  return std::abs(inner(a, b));
}

double vec_norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const cplx& c : v) s += std::norm(c);
  return std::sqrt(s);
}

double expectation(const ComplexMatrix& a, std::span<const cplx> v) {
  const std::vector<cplx> av = a.apply(v);
  return inner(v, av).real();
}

// ---------------------------------------------------------------------------
// Hermitian eigensolving

namespace {

void normalize_phase(std::vector<cplx>& v) {
  const double n = vec_norm(v);
  if (n > 0.0) {
    for (cplx& c : v) c /= n;
  }
  for (const cplx& c : v) {
    if (std::abs(c) > 1e-12) {
      const cplx phase = std::conj(c) / std::abs(c);
      for (cplx& d : v) d *= phase;
      break;
    }
  }
}

// Canonical representative for a fully degenerate spectrum: the basis
// vector carrying the largest-magnitude component, lowest index on ties.
std::vector<cplx> snap_to_basis(const std::vector<cplx>& v) {
  size_t best = 0;
  double best_mag = -1.0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > best_mag + 1e-15) {
      best_mag = std::abs(v[i]);
      best = i;
    }
  }
  std::vector<cplx> out(v.size(), 0.0);
  out[best] = 1.0;
  return out;
}

SpectralSummary eig2(const ComplexMatrix& m) {
  const double a = m.at(0, 0).real();
  const double d = m.at(1, 1).real();
  const cplx b = m.at(0, 1);
  const double h = 0.5 * (a - d);
  const double s = std::hypot(h, std::abs(b));
  const double mid = 0.5 * (a + d);

  SpectralSummary out;
  out.eigenvalues = {mid + s, mid - s};
  out.delta = 2.0 * s;

  std::vector<cplx> vmax(2);
  if (std::abs(b) < 1e-15 && s < 1e-15) {
    vmax = {1.0, 0.0};
  } else if (std::abs(b) < 1e-15) {
    vmax = (h >= 0.0) ? std::vector<cplx>{1.0, 0.0} : std::vector<cplx>{0.0, 1.0};
  } else if (h >= 0.0) {
    // second-row construction is the better conditioned one here
    vmax = {out.eigenvalues[0] - d, std::conj(b)};
  } else {
    vmax = {b, out.eigenvalues[0] - a};
  }
  normalize_phase(vmax);
  // the orthogonal complement is the other eigenvector
  std::vector<cplx> vmin = {-std::conj(vmax[1]), std::conj(vmax[0])};
  normalize_phase(vmin);
  out.eigenvectors = {vmax, vmin};

  if (out.delta <= kDegenerateTol) {
    vmax = snap_to_basis(vmax);
    vmin = snap_to_basis(vmin);
  }
  out.max_eigvec = std::move(vmax);
  out.min_eigvec = std::move(vmin);
  return out;
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a.at(i, j));
    }
  }
  return std::sqrt(s);
}

// One cyclic Jacobi rotation zeroing A[p][q], accumulated into V.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const cplx apq = a.at(p, q);
  const double mag = std::abs(apq);
  if (mag < 1e-300) return;
  const cplx phase = apq / mag;  // apq = mag * phase
  const double app = a.at(p, p).real();
  const double aqq = a.at(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0) ? 1.0 / (tau + std::hypot(1.0, tau))
                                : 1.0 / (tau - std::hypot(1.0, tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int dim = a.dim();
  std::vector<cplx> je(static_cast<size_t>(dim * dim), 0.0);
  for (int i = 0; i < dim; ++i) je[static_cast<size_t>(i * dim + i)] = 1.0;
  je[static_cast<size_t>(p * dim + p)] = c;
  je[static_cast<size_t>(q * dim + q)] = c;
  je[static_cast<size_t>(p * dim + q)] = s * phase;
  je[static_cast<size_t>(q * dim + p)] = -s * std::conj(phase);
  const ComplexMatrix j(dim, std::span<const cplx>(je));

  a = j.adjoint() * a * j;
  v = v * j;
}

SpectralSummary eig_jacobi(const ComplexMatrix& m) {
  const int dim = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(dim);

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kJacobiOffTol) break;
    for (int p = 0; p < dim - 1; ++p) {
      for (int q = p + 1; q < dim; ++q) jacobi_rotate(a, v, p, q);
    }
  }

  std::vector<int> order(static_cast<size_t>(dim));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a.at(i, i).real() > a.at(j, j).real(); });

  SpectralSummary out;
  out.eigenvalues.reserve(static_cast<size_t>(dim));
  for (int i : order) out.eigenvalues.push_back(a.at(i, i).real());
  out.delta = out.eigenvalues.front() - out.eigenvalues.back();

  auto column = [&](int c) {
    std::vector<cplx> col(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) col[static_cast<size_t>(i)] = v.at(i, c);
    return col;
  };
  out.eigenvectors.reserve(static_cast<size_t>(dim));
  for (int i : order) {
    std::vector<cplx> col = column(i);
    normalize_phase(col);
    out.eigenvectors.push_back(std::move(col));
  }
  std::vector<cplx> vmax = out.eigenvectors.front();
  std::vector<cplx> vmin = out.eigenvectors.back();
  if (out.delta <= kDegenerateTol) {
    vmax = snap_to_basis(vmax);
    vmin = snap_to_basis(vmin);
  }
  out.max_eigvec = std::move(vmax);
  out.min_eigvec = std::move(vmin);
  return out;
}

}  // namespace

SpectralSummary eig_hermitian(const ComplexMatrix& a) {
  if (!a.is_hermitian()) {
    throw NonHermitianInput("eig_hermitian requires a Hermitian-flagged matrix");
  }
  return a.dim() == 2 ? eig2(a) : eig_jacobi(a);
}

// ---------------------------------------------------------------------------
// Ky Fan norms

double ky_fan_norm(const Mat3& m) {
  // One-sided Jacobi: orthogonalize columns by plane rotations; the
  // singular values are the final column norms.
  std::array<std::array<double, 3>, 3> col{};
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) col[static_cast<size_t>(j)][static_cast<size_t>(i)] = m(i, j);
  }
  auto dot = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  };

  for (int sweep = 0; sweep < 30; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        auto& cp = col[static_cast<size_t>(p)];
        auto& cq = col[static_cast<size_t>(q)];
        const double alpha = dot(cp, cp);
        const double beta = dot(cq, cq);
        const double gamma = dot(cp, cq);
        if (std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0) ? 1.0 / (zeta + std::hypot(1.0, zeta))
                                       : 1.0 / (zeta - std::hypot(1.0, zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int i = 0; i < 3; ++i) {
          const double vp = cp[static_cast<size_t>(i)];
          const double vq = cq[static_cast<size_t>(i)];
          cp[static_cast<size_t>(i)] = c * vp - s * vq;
          cq[static_cast<size_t>(i)] = s * vp + c * vq;
        }
        rotated = true;
      }
    }
    if (!rotated) break;
  }

  double sum = 0.0;
  for (const auto& c : col) sum += std::sqrt(dot(c, c));
  return sum;
}

double ky_fan_sparse(double x, double y, double z) {
  if (x < 0.0 || z < 0.0) {
    throw DomainError("ky_fan_sparse expects nonnegative diagonal Gram entries");
  }
  // Kahan's fma trick: xz - y^2 to full relative precision even under
  // heavy cancellation (rank-one Gram matrices hit disc = 0 exactly).
  const double p = y * y;
  const double e = std::fma(y, y, -p);
  double disc = std::fma(x, z, -p) - e;
  if (disc < -1e-12) {
    throw DomainError("ky_fan_sparse: xz - y^2 below tolerance (not a Gram matrix)");
  }
  disc = std::max(disc, 0.0);
  return std::sqrt(x + z + 2.0 * std::sqrt(disc));
}

}  // namespace rucb
