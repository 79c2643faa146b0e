// Copyright 2026 the mgis authors
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

#ifndef MGIS_ERROR_HPP_
#define MGIS_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mgis {

enum class ErrorCode {
  ParseError,
  NotIdempotent,
  NoZero,
  NotComparable,
  NotUnique,
  NotInjective,
  ClosureExceedsLimit,
  SearchExceedsLimit,
  NotAcyclic,
  CyclicWithoutBound,
  GraphMismatch,
  NotCombinatorial,
  MultipleWitnesses,
  P3Fails,
  P4Fails,
  NotTotal,
  NotMoritaGraphType,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mgis

#endif  // MGIS_ERROR_HPP_
