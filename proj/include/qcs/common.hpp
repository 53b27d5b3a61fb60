// Copyright 2026 The qcsearch Authors
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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcs {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Tolerance constants shared by validation code and tests.
namespace tol {
inline constexpr double kNorm = 1e-10;          // statevector normalisation
inline constexpr double kDensity = 1e-9;        // trace / hermiticity of density matrices
inline constexpr double kProbability = 1e-9;    // sum of an outcome distribution
inline constexpr double kNegativeProb = 1e-12;  // smallest admissible probability
inline constexpr double kMatrix = 1e-9;         // symmetry / diagonal of score matrices
}  // namespace tol

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line` is 1-based; 0 means "not line specific".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::string field = {})
      : Error(line == 0 ? what
                        : "line " + std::to_string(line) +
                              (field.empty() ? "" : " (" + field + ")") + ": " + what),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace qcs
