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

#include <stdexcept>
#include <string>

namespace rucb {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NonHermitianInput : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

class InvalidChannel : public Error {
 public:
  using Error::Error;
};

class UnknownOutcome : public Error {
 public:
  using Error::Error;
};

class InvalidProbability : public Error {
 public:
  using Error::Error;
};

class InvalidScenario : public Error {
 public:
  using Error::Error;
};

class NotPure : public Error {
 public:
  using Error::Error;
};

class NotUnit : public Error {
 public:
  using Error::Error;
};

}  // namespace rucb
