// Copyright 2026 The qanneal Authors
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
#include <vector>

namespace qanneal {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: malformed instances, out-of-range indices, bad parameters.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the mathematical domain of an operation (e.g. s > 1).
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Problem too large for exhaustive or dense treatment.
class CapacityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Instance text could not be parsed. Carries the 1-based line number.
class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An iterative method failed to meet its tolerance.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what,
                          std::vector<double> residuals = {})
      : Error(what), residuals_(std::move(residuals)) {}
  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

}  // namespace qanneal
