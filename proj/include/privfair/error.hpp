// Copyright 2026 The privfair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVFAIR_ERROR_HPP_
#define PRIVFAIR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace privfair {

// Every domain failure in the library is one of these. The C API maps them
// one-to-one onto pf_status codes; the CLI prints the name and exits 1.
enum class ErrorCode {
  kInvalidArgument,
  kBudgetExhausted,
  kUnknownGroup,
  kEmptyGroup,
  kDegenerateLabels,
  kInfeasible,
  kNonFinite,
  kBothLikelihoodsZero,
  kParse,
  kIo,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }
  const char* name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

// Shorthand used by validation code throughout the library.
[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace privfair

#endif  // PRIVFAIR_ERROR_HPP_
