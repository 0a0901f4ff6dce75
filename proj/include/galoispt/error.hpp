// Copyright 2026 The galoispt Authors
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

#ifndef GALOISPT_ERROR_HPP
#define GALOISPT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace galoispt {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  DegreeTooLarge,
  InvalidArgument,
  FieldMismatch,
  NotInvertible,
  NonIntegerCoefficient,
  NotPrimitive,
  SizeMismatch,
  DivisionByZeroForm,
  TooManyVariables,
  FieldTooLarge,
  NonHomogeneous,
  ZeroForm,
  ZeroPoint,
  PreconditionFailed,
  WrongCharacteristic,
  DegreeTooSmall,
  ParseError,
  DimensionMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The message is prefixed with the
/// module that raised it ("field: ...", "multipoly: ...").
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string_view module, const std::string& what)
      : std::runtime_error(std::string(module) + ": " + what),
        code_(code),
        module_(module) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

}  // namespace galoispt

#endif  // GALOISPT_ERROR_HPP
