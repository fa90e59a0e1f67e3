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

#ifndef HIERGAMES_REPORT_H_
#define HIERGAMES_REPORT_H_

#include <optional>
#include <string>
#include <string_view>

#include "hiergames/document.h"
#include "hiergames/error.h"
#include "hiergames/weighted.h"

namespace hiergames {

enum class Command {
  kBuild,
  kCanonical,
  kDual,
  kAnalyze,
  kWeighted,
  kCertificate,
  kRecognize,
};

std::optional<Command> ParseCommand(std::string_view name);

struct RunOptions {
  int max_len = kDefaultMaxTransformLength;
  // build, canonical and dual print the resulting game as an explicit
  // document instead of a report.
  bool explicit_output = false;
};

// Plain "field: value" report, one fact per line, coalitions in
// lexicographic order. The whole report is produced before anything is
// returned; failures surface as Error.
std::string RunCommand(Command command, const GameDocument& doc,
                       const RunOptions& options = {});

// Process exit status for a failed command.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitCapacity = 4;

int ExitCodeFor(const Error& error);

}  // namespace hiergames

#endif  // HIERGAMES_REPORT_H_
