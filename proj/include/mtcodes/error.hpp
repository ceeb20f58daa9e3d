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

#ifndef MTCODES_ERROR_HPP
#define MTCODES_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mtcodes {

enum class ErrorKind {
  InvalidField,
  InverseOfZero,
  OrderOfZero,
  DivisionByZeroPoly,
  ReciprocalOfZero,
  NegativeExponentRemains,
  DegreeCapExceeded,
  ShapeMismatch,
  NotInvariant,
  BlockOverflow,
  InexactDivision,
  RankDefect,
  WrongCodeClass,
  NotADivisor,
  EnumerationCapExceeded,
  NonIntegerResult,
  ParseError,
  PropertyViolation,
  BudgetExhausted,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` identifies
// the failed precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace mtcodes

#endif
