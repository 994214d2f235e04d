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

#include <cstdint>
#include <optional>
#include <string>

namespace rucb::cli {

// exit codes shared by every subcommand
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

/// Flags shared across subcommands. tol falls back to a per-command
/// default when unset.
struct CommonFlags {
  uint64_t seed = 0;
  bool json = false;
  bool csv = false;
  std::optional<std::string> out;
  std::optional<double> tol;
};

struct BoundArgs {
  std::string scenario_path;
  bool verify = false;
  CommonFlags common;
};

struct SweepArgs {
  double theta_min = 0.0;
  double theta_max = 3.14159265358979323846;
  int steps = 65;
  double r = 0.5;
  CommonFlags common;
};

struct VerifyArgs {
  int count = 200;
  std::string suite = "all";  // all | bounds | fef | soundness
  CommonFlags common;
};

struct FefArgs {
  std::optional<std::string> state_path;
  std::optional<std::string> builtin;  // bell | mixed | product:pA,pB
  std::string method = "all";          // all | general | numeric | product
  CommonFlags common;
};

int cmd_bound(const BoundArgs& args);
int cmd_sweep(const SweepArgs& args);
int cmd_verify(const VerifyArgs& args);
int cmd_fef(const FefArgs& args);

}  // namespace rucb::cli
