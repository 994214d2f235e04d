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

#include "rucb/bounds.hpp"

namespace rucb::cli {

/// One evaluated scenario, ready for emission.
struct ReportRecord {
  std::string scenario_id;
  double C = 0.0;
  double T = 0.0;
  double Z = 0.0;
  bool nontrivial = false;
  double overlap_in = 0.0;
  double overlap_out = 0.0;
  std::optional<double> brute_force;
  std::optional<double> discrepancy;  // |C - brute_force| when both present
};

ReportRecord make_record(std::string scenario_id, const BoundReport& rep,
                         std::optional<double> brute_force);

/// 15 significant digits, C locale, '.' separator.
std::string fmt15(double x);

std::string record_to_text(const ReportRecord& r);
std::string record_to_json(const ReportRecord& r);
std::string record_csv_header();
std::string record_to_csv(const ReportRecord& r);

}  // namespace rucb::cli
