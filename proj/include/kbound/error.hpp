// Copyright 2026 The kbound Authors.
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

namespace kbound {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two scalars or matrices from different field modes were combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// An input violates an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured desk-scale guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// A theorem-backed inequality failed on a concrete instance.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

// No feasible point exists (LP, IP or transportation problem).
class Infeasible : public Error {
 public:
  using Error::Error;
};

}  // namespace kbound
