// Copyright 2026 The onc Authors
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

#ifndef ONC_ERROR_HPP
#define ONC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace onc {

enum class ErrorKind {
    InvalidDimension,
    DimensionMismatch,
    NotHermitian,
    NotUnitary,
    Validation,  // trace / positivity of a state
    Constraint,  // kernel trace constraints, moduli normalization
    Domain,      // parameter outside its admissible range
    Tolerance,   // numerical target not reached
    Parse,
};

inline const char *to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidDimension: return "invalid-dimension";
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::NotHermitian: return "not-hermitian";
        case ErrorKind::NotUnitary: return "not-unitary";
        case ErrorKind::Validation: return "validation";
        case ErrorKind::Constraint: return "constraint";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Tolerance: return "tolerance";
        case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto exit codes without parsing messages.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

/// Raised when an iterative procedure stops short of its target; carries the
/// best value found so far.
class ToleranceError : public Error {
   public:
    ToleranceError(const std::string &message, double best_estimate)
        : Error(ErrorKind::Tolerance, message), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

   private:
    double best_estimate_;
};

}  // namespace onc

#endif  // ONC_ERROR_HPP
