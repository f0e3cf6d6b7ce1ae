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

#include "dessins/error.h"

namespace dessins {
namespace {

std::string FormatPosition(int line, int column, const std::string& message) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ", ";
  out += "column " + std::to_string(column) + ": " + message;
  return out;
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kDegreeMismatch: return "degree-mismatch";
    case ErrorCode::kNotTransitive: return "not-transitive";
    case ErrorCode::kProductNotIdentity: return "product-not-identity";
    case ErrorCode::kNotClean: return "not-clean";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kBoundExceeded: return "bound-exceeded";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kEmptyFamily: return "empty-family";
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

SyntaxError::SyntaxError(int line, int column, const std::string& message)
    : DessinError(ErrorCode::kSyntax, FormatPosition(line, column, message)),
      line_(line),
      column_(column),
      detail_(message) {}

}  // namespace dessins
