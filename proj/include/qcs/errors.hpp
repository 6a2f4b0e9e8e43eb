// Copyright 2026 The qcs Authors
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

namespace qcs {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension or index problems (non-square matrix, factor index out of range, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Region label problems (unknown factor, duplicate label, bad permutation).
class RegionError : public Error {
 public:
  using Error::Error;
};

/// Input violated a Hermiticity precondition; carries the residual max |M - M†|.
class NotHermitianError : public Error {
 public:
  NotHermitianError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Input violated a positive-semidefiniteness precondition; carries the
/// offending (most negative) eigenvalue.
class NotPsdError : public Error {
 public:
  NotPsdError(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// A domain type invariant failed (trace, normalization, POVM completeness, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A Choi-state convention marker did not match what the operation requires.
class ConventionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file (bad JSON, missing keys, wrong element types).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcs
