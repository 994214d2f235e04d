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

#include "rucb/bounds.hpp"
#include "rucb/errors.hpp"

namespace rucb::cli {

/// Malformed or schema-violating input file. Parse failures carry
/// line/column positions; validation failures carry the JSON path.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Scenario file format, version "1". Complex numbers are [re, im]
/// pairs, matrices are row-major nested lists. The schema is strict:
/// unknown fields are rejected.
///
/// {
///   "version": "1",
///   "r": 0.5,
///   "meas1": {"input": [[..2x2..]], "povm": [{"label": "m0", "effect": [[..]]}, ...]},
///   "meas2": {...},
///   "subsetM": ["m0"],
///   "subsetN": ["n0"]
/// }
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Serialize with 17 significant digits so a round trip is bit-exact.
std::string scenario_to_json(const Scenario& s);

/// Two-qubit state file: {"version": "1", "state": [[..4x4..]]}.
ComplexMatrix parse_state(const std::string& text);
ComplexMatrix load_state(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace rucb::cli
