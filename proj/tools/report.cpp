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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace rucb::cli {

ReportRecord make_record(std::string scenario_id, const BoundReport& rep,
                         std::optional<double> brute_force) {
  ReportRecord r;
  r.scenario_id = std::move(scenario_id);
  r.C = rep.C;
  r.T = rep.T;
  r.Z = rep.Z;
  r.nontrivial = rep.nontrivial;
  r.overlap_in = rep.overlap_in;
  r.overlap_out = rep.overlap_out;
  r.brute_force = brute_force;
  if (brute_force) r.discrepancy = std::abs(rep.C - *brute_force);
  return r;
}

std::string fmt15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string record_to_text(const ReportRecord& r) {
  std::ostringstream os;
  os << "scenario:    " << r.scenario_id << "\n"
     << "C:           " << fmt15(r.C) << "\n"
     << "T:           " << fmt15(r.T) << "\n"
     << "Z:           " << fmt15(r.Z) << "\n"
     << "nontrivial:  " << (r.nontrivial ? "true" : "false") << "\n"
     << "overlap_in:  " << fmt15(r.overlap_in) << "\n"
     << "overlap_out: " << fmt15(r.overlap_out) << "\n";
  if (r.brute_force) {
    os << "brute_force: " << fmt15(*r.brute_force) << "\n"
       << "discrepancy: " << fmt15(*r.discrepancy) << "\n";
  }
  return os.str();
}

std::string record_to_json(const ReportRecord& r) {
  nlohmann::json j{{"scenario", r.scenario_id},
                   {"C", r.C},
                   {"T", r.T},
                   {"Z", r.Z},
                   {"nontrivial", r.nontrivial},
                   {"overlap_in", r.overlap_in},
                   {"overlap_out", r.overlap_out}};
  if (r.brute_force) {
    j["brute_force"] = *r.brute_force;
    j["discrepancy"] = *r.discrepancy;
  }
  return j.dump(2) + "\n";
}

std::string record_csv_header() {
  return "scenario,C,T,Z,nontrivial,overlap_in,overlap_out,brute_force,discrepancy\n";
}

std::string record_to_csv(const ReportRecord& r) {
  std::ostringstream os;
  os << r.scenario_id << ',' << fmt15(r.C) << ',' << fmt15(r.T) << ',' << fmt15(r.Z) << ','
     << (r.nontrivial ? "true" : "false") << ',' << fmt15(r.overlap_in) << ','
     << fmt15(r.overlap_out) << ',';
  if (r.brute_force) os << fmt15(*r.brute_force);
  os << ',';
  if (r.discrepancy) os << fmt15(*r.discrepancy);
  os << '\n';
  return os.str();
}

}  // namespace rucb::cli
