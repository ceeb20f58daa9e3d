/*
   Copyright 2026 The mtcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "mtcodes/error.hpp"

namespace mtcodes {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::InverseOfZero: return "InverseOfZero";
    case ErrorKind::OrderOfZero: return "OrderOfZero";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::ReciprocalOfZero: return "ReciprocalOfZero";
    case ErrorKind::NegativeExponentRemains: return "NegativeExponentRemains";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::BlockOverflow: return "BlockOverflow";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::RankDefect: return "RankDefect";
    case ErrorKind::WrongCodeClass: return "WrongCodeClass";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::PropertyViolation: return "PropertyViolation";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace mtcodes
