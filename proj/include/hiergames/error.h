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

#ifndef HIERGAMES_ERROR_H_
#define HIERGAMES_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hiergames {

enum class ErrorCode {
  kInvalidCoalition,
  kInvalidShift,
  kInvalidGame,
  kEmptyWinningSet,
  kNotComplete,
  kInvalidParams,
  kCapacityExceeded,
  kNoCertificate,
  kInvalidComparison,
  kParse,
  kValidation,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Positioned error for the textual game format. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& reason);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  int column_;
  std::string reason_;
};

}  // namespace hiergames

#endif  // HIERGAMES_ERROR_H_
