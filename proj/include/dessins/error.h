// Copyright 2026 The Authors.
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

#ifndef DESSINS_ERROR_H_
#define DESSINS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dessins {

enum class ErrorCode {
  kInvalidArgument,
  kDegreeMismatch,
  kNotTransitive,
  kProductNotIdentity,
  kNotClean,
  kOutOfRange,
  kBoundExceeded,
  kDisconnected,
  kEmptyFamily,
  kSyntax,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure surfaced by the library. Validation problems with user data
// (bad triples, out-of-range indices, syntax) and size-bound violations are
// distinguished by code() so the CLI can map them onto exit statuses.
class DessinError : public std::runtime_error {
 public:
  DessinError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// A kSyntax error with a 1-based position. line() is 0 when the text being
// parsed is a single fragment (e.g. one cycle-notation string).
class SyntaxError : public DessinError {
 public:
  SyntaxError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

}  // namespace dessins

#endif  // DESSINS_ERROR_H_
