// Copyright 2026 The gf2perm Authors.
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

#ifndef GF2PERM_ERRORS_HPP_
#define GF2PERM_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gf2perm {

enum class ErrorCode {
  kInvalidModulus,
  kSizeGuard,
  kDivisionByZero,
  kInvalidSubfield,
  kNotQLinear,
  kWrongDegree,
  kBadParameters,
  kNotInSubfield,
  kUnknownTheorem,
  kParse,
};

std::string_view error_code_name(ErrorCode code);

// Every mathematical failure surfaced by the library. Internal consistency
// violations (arithmetic bugs) are reported as std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gf2perm

#endif  // GF2PERM_ERRORS_HPP_
