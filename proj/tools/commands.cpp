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

#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "report.hpp"
#include "rucb/bounds.hpp"
#include "scenario_io.hpp"

namespace rucb::cli {

namespace {

// All output goes through here so --out behaves identically everywhere.
int emit(const CommonFlags& common, const std::string& payload) {
  if (common.out) {
    std::ofstream f(*common.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write '" << *common.out << "'\n";
      return kExitUsage;
    }
    f << payload;
    return kExitOk;
  }
  std::cout << payload;
  return kExitOk;
}

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

struct SuiteStats {
  std::string name;
  int count = 0;
  double max_discrepancy = 0.0;
  int worst_instance = -1;
  uint64_t worst_child_seed = 0;

  void update(double d, int instance, uint64_t child) {
    if (d > max_discrepancy || worst_instance < 0) {
      max_discrepancy = d;
      worst_instance = instance;
      worst_child_seed = child;
    }
  }
};

SuiteStats run_bounds_suite(uint64_t seed, int count) {
  SuiteStats st{"bounds"};
  st.count = count;
  for (int i = 0; i < count; ++i) {
    const uint64_t child = Rng::child_seed(seed, static_cast<uint64_t>(i));
    Rng rng(child);
    const Scenario s = sample_scenario(rng);
    const double c = bound_C(s).C;
    const double bf = brute_force_C(s).value;
    st.update(std::abs(c - bf), i, child);
  }
  return st;
}

std::pair<SuiteStats, SuiteStats> run_fef_suite(uint64_t seed, int count) {
  SuiteStats numeric{"fef-numeric"};
  SuiteStats general{"fef-general"};
  numeric.count = general.count = count;
  for (int i = 0; i < count; ++i) {
    const uint64_t child = Rng::child_seed(seed, 0x10000000ull + static_cast<uint64_t>(i));
    Rng rng(child);
    const double r = rng.uniform();
    const QubitState ra = sample_state(rng), rb = sample_state(rng);
    const QubitState ta = sample_state(rng), tb = sample_state(rng);
    const double mix = fef_two_product_mixture(r, ra, rb, ta, tb).value;
    const ComplexMatrix rho = two_product_mixture_state(r, ra, rb, ta, tb);
    numeric.update(std::abs(mix - fef_numeric(rho).value), i, child);
    general.update(std::abs(mix - fef_general(rho).value), i, child);
  }
  return {numeric, general};
}

SuiteStats run_soundness_suite(uint64_t seed, int count) {
  SuiteStats st{"soundness"};
  st.count = count;
  for (int i = 0; i < count; ++i) {
    const uint64_t child = Rng::child_seed(seed, 0x20000000ull + static_cast<uint64_t>(i));
    Rng rng(child);
    const Scenario s = sample_scenario(rng);
    const RandomUnitaryChannel ch = sample_ru_channel(rng, 1 + static_cast<int>(rng.uniform() * 3));
    // positive excess would violate soundness; clamp the reported figure at 0
    st.update(std::max(0.0, lhs_value(s, ch) - bound_C(s).C), i, child);
  }
  return st;
}

std::string suite_text(const SuiteStats& st, double tol) {
  std::ostringstream os;
  os << st.name << ": " << st.count << " instances, max discrepancy " << fmt15(st.max_discrepancy)
     << (st.max_discrepancy <= tol ? "  [ok]" : "  [FAIL]") << "\n";
  return os.str();
}

nlohmann::json suite_json(const SuiteStats& st, double tol) {
  return {{"suite", st.name},
          {"count", st.count},
          {"max_discrepancy", st.max_discrepancy},
          {"ok", st.max_discrepancy <= tol}};
}

}  // namespace

int cmd_bound(const BoundArgs& args) {
  Scenario s = load_scenario(args.scenario_path);

  const BoundReport rep = bound_C(s);
  std::optional<double> bf;
  if (args.verify) bf = brute_force_C(s).value;
  const ReportRecord rec = make_record(args.scenario_path, rep, bf);

  std::string payload;
  if (args.common.json) {
    payload = record_to_json(rec);
  } else if (args.common.csv) {
    payload = record_csv_header() + record_to_csv(rec);
  } else {
    payload = record_to_text(rec);
  }
  const int rc = emit(args.common, payload);
  if (rc != kExitOk) return rc;

  const double tol = args.common.tol.value_or(1e-3);
  if (args.verify && rec.discrepancy && *rec.discrepancy > tol) {
    std::cerr << "verification failed: |C - brute_force| = " << fmt15(*rec.discrepancy) << " > "
              << fmt15(tol) << "\n";
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_sweep(const SweepArgs& args) {
  if (args.steps < 2) return fail_usage("sweep needs at least 2 steps");
  if (args.theta_min < 0.0 || args.theta_max > std::numbers::pi ||
      args.theta_min > args.theta_max) {
    return fail_usage("sweep range must satisfy 0 <= theta-min <= theta-max <= pi");
  }
  if (args.r < 0.0 || args.r > 1.0) return fail_usage("r must lie in [0, 1]");

  std::vector<double> grid;
  grid.reserve(static_cast<size_t>(args.steps));
  const double step = (args.theta_max - args.theta_min) / (args.steps - 1);
  for (int i = 0; i < args.steps; ++i) grid.push_back(args.theta_min + i * step);

  std::ostringstream os;
  os << "theta,C,T,nontrivial\n";
  for (const SweepPoint& p : example_sweep(grid, args.r)) {
    os << fmt15(p.theta) << ',' << fmt15(p.C) << ',' << fmt15(p.T) << ','
       << (p.nontrivial ? "true" : "false") << '\n';
  }
  return emit(args.common, os.str());
}

int cmd_verify(const VerifyArgs& args) {
  if (args.count < 1) return fail_usage("--count must be at least 1");
  const bool all = args.suite == "all";
  if (!all && args.suite != "bounds" && args.suite != "fef" && args.suite != "soundness") {
    return fail_usage("unknown suite '" + args.suite + "'");
  }
  const double tol = args.common.tol.value_or(1e-4);
  const uint64_t seed = args.common.seed;

  std::vector<SuiteStats> stats;
  if (all || args.suite == "bounds") stats.push_back(run_bounds_suite(seed, args.count));
  if (all || args.suite == "fef") {
    const auto [numeric, general] = run_fef_suite(seed, args.count);
    stats.push_back(numeric);
    stats.push_back(general);
  }
  if (all || args.suite == "soundness") stats.push_back(run_soundness_suite(seed, args.count));

  bool ok = true;
  std::ostringstream os;
  nlohmann::json jout = nlohmann::json::array();
  for (const SuiteStats& st : stats) {
    ok = ok && st.max_discrepancy <= tol;
    if (args.common.json) {
      jout.push_back(suite_json(st, tol));
    } else {
      os << suite_text(st, tol);
    }
  }
  const int rc = emit(args.common, args.common.json ? jout.dump(2) + "\n" : os.str());
  if (rc != kExitOk) return rc;

  if (!ok) {
    for (const SuiteStats& st : stats) {
      if (st.max_discrepancy > tol) {
        std::cerr << "verification failed in suite '" << st.name << "': instance "
                  << st.worst_instance << " (child seed " << st.worst_child_seed
                  << "); replay with --seed " << seed << "\n";
      }
    }
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_fef(const FefArgs& args) {
  if (args.state_path.has_value() == args.builtin.has_value()) {
    return fail_usage("pass exactly one of a state file or --builtin");
  }

  std::string id;
  ComplexMatrix rho(4);
  bool product_known = false;
  QubitState factor_a = QubitState::maximally_mixed();
  QubitState factor_b = QubitState::maximally_mixed();

  if (args.state_path) {
    id = *args.state_path;
    rho = load_state(*args.state_path);
  } else {
    id = *args.builtin;
    if (*args.builtin == "bell") {
      rho = bell_projector();
    } else if (*args.builtin == "mixed") {
      rho = 0.25 * ComplexMatrix::identity(4);
      product_known = true;  // I/4 = (I/2) x (I/2)
    } else if (args.builtin->rfind("product:", 0) == 0) {
      double pa = 0.0, pb = 0.0;
      if (std::sscanf(args.builtin->c_str(), "product:%lf,%lf", &pa, &pb) != 2 || pa < 0.0 ||
          pa > 1.0 || pb < 0.0 || pb > 1.0) {
        return fail_usage("--builtin product expects product:pA,pB with both in [0, 1]");
      }
      factor_a = QubitState(ComplexMatrix(2, {pa, 0.0, 0.0, 1.0 - pa}));
      factor_b = QubitState(ComplexMatrix(2, {pb, 0.0, 0.0, 1.0 - pb}));
      rho = kron(factor_a.matrix(), factor_b.matrix());
      product_known = true;
    } else {
      return fail_usage("unknown builtin '" + *args.builtin + "'");
    }
  }

  std::vector<FefResult> results;
  const bool want_all = args.method == "all";
  if (want_all || args.method == "general") results.push_back(fef_general(rho));
  if (args.method == "product" || (want_all && product_known)) {
    if (!product_known) return fail_usage("method 'product' needs a factorized builtin state");
    results.push_back(fef_product(factor_a, factor_b));
  }
  if (want_all || args.method == "numeric") results.push_back(fef_numeric(rho));
  if (results.empty()) return fail_usage("unknown method '" + args.method + "'");

  double lo = results.front().value, hi = results.front().value;
  for (const FefResult& r : results) {
    lo = std::min(lo, r.value);
    hi = std::max(hi, r.value);
  }

  if (args.common.json) {
    nlohmann::json j{{"state", id}, {"results", nlohmann::json::array()}, {"spread", hi - lo}};
    for (const FefResult& r : results) {
      j["results"].push_back({{"method", to_string(r.method)}, {"value", r.value}});
    }
    return emit(args.common, j.dump(2) + "\n");
  }
  std::ostringstream os;
  os << "state: " << id << "\n";
  for (const FefResult& r : results) {
    os << to_string(r.method) << ": " << fmt15(r.value) << "\n";
  }
  if (results.size() > 1) os << "spread: " << fmt15(hi - lo) << "\n";
  return emit(args.common, os.str());
}

}  // namespace rucb::cli
