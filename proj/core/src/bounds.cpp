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

#include "rucb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace rucb {

namespace {

void check_subset(const Povm& povm, const std::vector<std::string>& subset, const char* which) {
  std::set<std::string> seen;
  for (const std::string& l : subset) {
    povm.effect(l);  // throws UnknownOutcome if absent
    if (!seen.insert(l).second) {
      throw InvalidScenario(std::string("duplicate label in subset ") + which);
    }
  }
}

// mixed-success operator G = r rho^T x E(M) + (1-r) tau^T x F(N)
ComplexMatrix success_operator(const Scenario& s) {
  return s.r() * kron(s.meas1().input().matrix().transpose(), s.effect_m()) +
         (1.0 - s.r()) * kron(s.meas2().input().matrix().transpose(), s.effect_n());
}

double lhs_from_choi(const Scenario& s, const ChoiMatrix& j) {
  return (success_operator(s) * j.matrix()).trace().real();
}

}  // namespace

Scenario::Scenario(ChannelMeasurement meas1, ChannelMeasurement meas2, double r,
                   std::vector<std::string> subset_m, std::vector<std::string> subset_n)
    : meas1_(std::move(meas1)),
      meas2_(std::move(meas2)),
      r_(r),
      subset_m_(std::move(subset_m)),
      subset_n_(std::move(subset_n)) {
  if (!(r >= 0.0 && r <= 1.0)) throw InvalidProbability("measurement weight must lie in [0, 1]");
  check_subset(meas1_.povm(), subset_m_, "M");
  check_subset(meas2_.povm(), subset_n_, "N");
}

double z_norm(const Scenario& s) {
  return s.r() * s.effect_m().trace().real() + (1.0 - s.r()) * s.effect_n().trace().real();
}

BoundReport bound_C(const Scenario& s) {
  BoundReport rep;
  rep.spectral_rho_in = eig_hermitian(s.meas1().input().matrix());
  rep.spectral_tau_in = eig_hermitian(s.meas2().input().matrix());
  rep.spectral_effect_m = eig_hermitian(s.effect_m());
  rep.spectral_effect_n = eig_hermitian(s.effect_n());

  rep.overlap_in =
      std::min(1.0, overlap_abs(rep.spectral_rho_in.max_eigvec, rep.spectral_tau_in.max_eigvec));
  rep.overlap_out =
      std::min(1.0, overlap_abs(rep.spectral_effect_m.max_eigvec, rep.spectral_effect_n.max_eigvec));

  const double a = s.r() * rep.spectral_rho_in.delta * rep.spectral_effect_m.delta;
  const double b = (1.0 - s.r()) * rep.spectral_tau_in.delta * rep.spectral_effect_n.delta;
  const double w = rep.overlap_in * rep.overlap_out +
                   std::sqrt(std::max(0.0, 1.0 - rep.overlap_in * rep.overlap_in) *
                             std::max(0.0, 1.0 - rep.overlap_out * rep.overlap_out));

  rep.Z = z_norm(s);
  rep.C = 0.5 * rep.Z + 0.5 * std::sqrt((a - b) * (a - b) + 4.0 * a * b * w * w);
  rep.T = bound_T(s);
  rep.nontrivial = rep.C < rep.T - 1e-9;
  return rep;
}

double bound_T(const Scenario& s) {
  const ComplexMatrix em = s.effect_m();
  const ComplexMatrix fn = s.effect_n();
  const double dr = eig_hermitian(s.meas1().input().matrix()).delta;
  const double dt = eig_hermitian(s.meas2().input().matrix()).delta;
  const double de = eig_hermitian(em).delta;
  const double df = eig_hermitian(fn).delta;
  return 0.5 * (s.r() * (em.trace().real() + dr * de) +
                (1.0 - s.r()) * (fn.trace().real() + dt * df));
}

double bound_C_pure_pvm(const QubitState& psi_in, const QubitState& phi_in, const Vec2& em,
                        const Vec2& fn, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw InvalidProbability("measurement weight must lie in [0, 1]");
  if (std::abs(vec_norm(em) - 1.0) > kQuantumTol || std::abs(vec_norm(fn) - 1.0) > kQuantumTol) {
    throw NotUnit("PVM vectors must be unit");
  }
  const SpectralSummary spsi = eig_hermitian(psi_in.matrix());
  const SpectralSummary sphi = eig_hermitian(phi_in.matrix());
  if (spsi.eigenvalues.front() < 1.0 - kQuantumTol || sphi.eigenvalues.front() < 1.0 - kQuantumTol) {
    throw NotPure("input states must be pure");
  }

  const double oin = std::min(1.0, overlap_abs(spsi.max_eigvec, sphi.max_eigvec));
  const double oout = std::min(1.0, overlap_abs(em, fn));
  const double w =
      oin * oout + std::sqrt(std::max(0.0, 1.0 - oin * oin) * std::max(0.0, 1.0 - oout * oout));
  return 0.5 + std::sqrt((r - 0.5) * (r - 0.5) + r * (1.0 - r) * w * w);
}

bool nontrivial(const Scenario& s, double tol) {
  if (s.r() <= 0.0 || s.r() >= 1.0) return false;  // endpoints never give a strict gap
  const BoundReport rep = bound_C(s);
  return std::abs(rep.overlap_in - rep.overlap_out) > tol;
}

double lhs_value(const Scenario& s, const RandomUnitaryChannel& channel) {
  return lhs_from_choi(s, choi(channel));
}

double lhs_value(const Scenario& s, const KrausChannel& channel) {
  return lhs_from_choi(s, choi(channel));
}

BruteForceResult brute_force_C(const Scenario& s, const OptimizerOptions& opts) {
  const ComplexMatrix g = success_operator(s);
  const auto objective = [&g](const std::array<double, 3>& angles) {
    const ComplexMatrix u = unitary_from_angles(angles[0], angles[1], angles[2]);
    // (I x U) sum_i |ii> = (u00, u10, u01, u11)
    const std::array<cplx, 4> w{u.at(0, 0), u.at(1, 0), u.at(0, 1), u.at(1, 1)};
    return expectation(g, w);
  };
  const UnitarySearchResult best = maximize_over_unitaries(objective, opts);
  return {best.value, best.unitary};
}

Scenario example_scenario(double theta, double r) {
  const Vec2 phi{std::cos(theta / 2.0), std::sin(theta / 2.0)};
  const Vec2 x0{std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};
  ChannelMeasurement t1(QubitState::basis(0), Povm::projective({1.0, 0.0}, "m0", "m1"));
  ChannelMeasurement t2(QubitState::pure(phi), Povm::projective(x0, "n0", "n1"));
  return Scenario(std::move(t1), std::move(t2), r, {"m0"}, {"n0"});
}

std::vector<SweepPoint> example_sweep(const std::vector<double>& theta_grid, double r) {
  std::vector<SweepPoint> out;
  out.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    if (theta < 0.0 || theta > std::numbers::pi) {
      throw DomainError("sweep angle must lie in [0, pi]");
    }
    const BoundReport rep = bound_C(example_scenario(theta, r));
    out.push_back({theta, rep.C, rep.T, rep.nontrivial});
  }
  return out;
}

std::pair<double, double> landau_pollak_check(const Vec2& a, const Vec2& b,
                                              const QubitState& rho) {
  if (std::abs(vec_norm(a) - 1.0) > kQuantumTol || std::abs(vec_norm(b) - 1.0) > kQuantumTol) {
    throw NotUnit("landau_pollak_check expects unit vectors");
  }
  const double lhs = 0.5 * expectation(rho.matrix(), a) + 0.5 * expectation(rho.matrix(), b);
  const double bound = 0.5 * (1.0 + overlap_abs(a, b));
  return {lhs, bound};
}

Scenario sample_scenario(Rng& rng) {
  ChannelMeasurement t1(sample_state(rng), sample_binary_povm(rng));
  ChannelMeasurement t2(sample_state(rng), sample_binary_povm(rng));
  const double r = rng.uniform();
  auto pick = [&rng](const Povm& povm) {
    std::vector<std::string> subset;
    for (const std::string& l : povm.labels()) {
      if (rng.uniform() < 0.5) subset.push_back(l);
    }
    return subset;
  };
  std::vector<std::string> m = pick(t1.povm());
  std::vector<std::string> n = pick(t2.povm());
  return Scenario(std::move(t1), std::move(t2), r, std::move(m), std::move(n));
}

Scenario sample_nondegenerate_scenario(Rng& rng) {
  for (;;) {
    ChannelMeasurement t1(sample_state(rng), sample_binary_povm(rng));
    ChannelMeasurement t2(sample_state(rng), sample_binary_povm(rng));
    const double r = rng.uniform(0.05, 0.95);
    Scenario s(std::move(t1), std::move(t2), r, {"0"}, {"0"});
    const BoundReport rep = bound_C(s);
    const double min_delta =
        std::min({rep.spectral_rho_in.delta, rep.spectral_tau_in.delta,
                  rep.spectral_effect_m.delta, rep.spectral_effect_n.delta});
    if (min_delta > 1e-6) return s;
  }
}

}  // namespace rucb
