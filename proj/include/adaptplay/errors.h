// Copyright 2026 The adaptplay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADAPTPLAY_ERRORS_H_
#define ADAPTPLAY_ERRORS_H_

#include <stdexcept>
#include <string>

namespace adaptplay {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector or set dimensions that do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A Bregman quantity evaluated at a base point on the boundary of the
// regularizer's domain, where the gradient is undefined.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

// Invalid scalar parameter (non-positive step, radius, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Learner commit/ingest calls issued out of order.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Inconsistent experiment or comparator configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Numeric precondition of a utility violated by its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Non-finite value produced by an oracle during a run.
class NumericalAbort : public Error {
 public:
  NumericalAbort(const std::string& what, long step)
      : Error(what + " at step " + std::to_string(step)), step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

}  // namespace adaptplay

#endif  // ADAPTPLAY_ERRORS_H_
