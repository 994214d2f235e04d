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

#include <string>
#include <vector>

#include "rucb/fef.hpp"
#include "rucb/optimize.hpp"
#include "rucb/quantum.hpp"

namespace rucb {

/// A pair of ancilla-free channel measurements applied with probabilities
/// r and 1 - r, plus the outcome subsets whose joint success probability
/// is being bounded. Subsets may be empty or exhaust all outcomes.
class Scenario {
 public:
  Scenario(ChannelMeasurement meas1, ChannelMeasurement meas2, double r,
           std::vector<std::string> subset_m, std::vector<std::string> subset_n);

  const ChannelMeasurement& meas1() const { return meas1_; }
  const ChannelMeasurement& meas2() const { return meas2_; }
  double r() const { return r_; }
  const std::vector<std::string>& subset_m() const { return subset_m_; }
  const std::vector<std::string>& subset_n() const { return subset_n_; }

  /// Summed effects over the selected subsets.
  ComplexMatrix effect_m() const { return meas1_.povm().effect_sum(subset_m_); }
  ComplexMatrix effect_n() const { return meas2_.povm().effect_sum(subset_n_); }

 private:
  ChannelMeasurement meas1_;
  ChannelMeasurement meas2_;
  double r_;
  std::vector<std::string> subset_m_;
  std::vector<std::string> subset_n_;
};

/// Everything the closed-form bound evaluation produces: the bound C on
/// the mixed success probability over random unitary channels, the trivial
/// bound T (independent maximization of each term), the effect-mass
/// normalization Z, and the spectral data the formula consumed.
struct BoundReport {
  double C = 0.0;
  double T = 0.0;
  double Z = 0.0;
  bool nontrivial = false;                // C < T - 1e-9
  SpectralSummary spectral_rho_in;        // input state of measurement 1
  SpectralSummary spectral_tau_in;        // input state of measurement 2
  SpectralSummary spectral_effect_m;      // E(M)
  SpectralSummary spectral_effect_n;      // F(N)
  double overlap_in = 0.0;                // |<psi|phi>| of the input states
  double overlap_out = 0.0;               // |<psi'|phi'>| of the summed effects
};

/// Result of the brute-force maximization over unitary channels.
struct BruteForceResult {
  double value = 0.0;
  ComplexMatrix unitary{2};
};

/// One row of a parameter sweep over the built-in two-PVM family.
struct SweepPoint {
  double theta = 0.0;
  double C = 0.0;
  double T = 0.0;
  bool nontrivial = false;
};

/// Z = r tr E(M) + (1 - r) tr F(N), the total effect mass.
double z_norm(const Scenario& s);

/// Closed-form bound on r P(M) + (1 - r) Q(N) over all random unitary
/// channels:
///
///   C = Z/2 + (1/2) sqrt[ (a - b)^2 + 4ab w^2 ],
///   a = r spread(rho_in) spread(E(M)),  b = (1-r) spread(tau_in) spread(F(N)),
///   w = |<psi|phi>||<psi'|phi'>| + sqrt((1-|<psi|phi>|^2)(1-|<psi'|phi'>|^2)),
///
/// where psi/phi/psi'/phi' are the top eigenvectors of rho_in, tau_in,
/// E(M), F(N). When a spread vanishes the corresponding eigenvector is the
/// deterministic degenerate-choice vector and provably cannot change C.
BoundReport bound_C(const Scenario& s);

/// Trivial bound: each measurement maximized independently,
///   T = (1/2)[ r (tr E(M) + spread(rho_in) spread(E(M)))
///            + (1-r) (tr F(N) + spread(tau_in) spread(F(N))) ].
double bound_T(const Scenario& s);

/// Specialized closed form for pure inputs and rank-one projective
/// singleton subsets, written directly in the two overlaps. Agrees with
/// bound_C of the assembled scenario to machine precision.
/// Throws NotPure / NotUnit when the inputs fail their checks.
double bound_C_pure_pvm(const QubitState& psi_in, const QubitState& phi_in, const Vec2& em,
                        const Vec2& fn, double r);

/// Overlap criterion for a strict gap C < T: true iff the two top-
/// eigenvector overlaps differ by more than tol. Meaningful for 0 < r < 1
/// and nondegenerate spreads; returns false at the endpoints r = 0, 1.
bool nontrivial(const Scenario& s, double tol = 1e-8);

/// Mixed success probability r sum_{m in M} p_m + (1-r) sum_{n in N} q_n
/// of a concrete channel in the scenario.
double lhs_value(const Scenario& s, const RandomUnitaryChannel& channel);
double lhs_value(const Scenario& s, const KrausChannel& channel);

/// Maximize lhs_value over single-unitary channels with the shared
/// grid + simplex search. By convexity the maximum over all random
/// unitary channels is attained at a single unitary, so this is an
/// independent check of bound_C.
BruteForceResult brute_force_C(const Scenario& s, const OptimizerOptions& opts = {});

/// Built-in family: inputs |0> and cos(theta/2)|0> + sin(theta/2)|1>,
/// computational-basis PVM vs diagonal-basis PVM, singleton subsets
/// {m0}, {n0}.
Scenario example_scenario(double theta, double r);

/// Evaluate bound_C / bound_T across the built-in family.
std::vector<SweepPoint> example_sweep(const std::vector<double>& theta_grid, double r);

/// State uncertainty check: returns (lhs, bound) with
/// lhs = (1/2)<a|rho|a> + (1/2)<b|rho|b> and bound = (1/2)(1 + |<a|b>|).
/// lhs <= bound for every state and pair of unit vectors.
std::pair<double, double> landau_pollak_check(const Vec2& a, const Vec2& b,
                                              const QubitState& rho);

// --------------------------------------------------------------------------
// Seeded scenario samplers for the randomized verification suites.

/// Random scenario: sampled inputs, binary POVMs, r uniform in [0, 1],
/// independent coin flips for subset membership (possibly empty or full).
Scenario sample_scenario(Rng& rng);

/// Random scenario restricted to the generic setting: r in [0.05, 0.95],
/// singleton subsets, resampled until all four spectral spreads exceed
/// 1e-6.
Scenario sample_nondegenerate_scenario(Rng& rng);

}  // namespace rucb
