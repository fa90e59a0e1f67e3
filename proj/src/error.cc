// Copyright 2026 The Hiergames Authors
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

#include "hiergames/error.h"

namespace hiergames {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidCoalition: return "invalid-coalition";
    case ErrorCode::kInvalidShift: return "invalid-shift";
    case ErrorCode::kInvalidGame: return "invalid-game";
    case ErrorCode::kEmptyWinningSet: return "empty-winning-set";
    case ErrorCode::kNotComplete: return "not-complete";
    case ErrorCode::kInvalidParams: return "invalid-params";
    case ErrorCode::kCapacityExceeded: return "too-large";
    case ErrorCode::kNoCertificate: return "no-certificate";
    case ErrorCode::kInvalidComparison: return "invalid-comparison";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kValidation: return "validation-error";
  }
  return "unknown";
}

ParseError::ParseError(ErrorCode code, int line, int column,
                       const std::string& reason)
    : Error(code, "line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + reason),
      line_(line),
      column_(column),
      reason_(reason) {}

}  // namespace hiergames
