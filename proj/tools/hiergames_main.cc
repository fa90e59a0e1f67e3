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

// hiergames <command> <file> [--max-len N] [--explicit-output]

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hiergames/document.h"
#include "hiergames/error.h"
#include "hiergames/report.h"

int main(int argc, char** argv) {
  CLI::App app{"Analyze hierarchical simple games on multisets"};
  std::string command_name;
  std::string path;
  hiergames::RunOptions options;
  app.add_option("command", command_name,
                 "build | canonical | dual | analyze | weighted | certificate | recognize")
      ->required();
  app.add_option("file", path, "game description ('-' for stdin)")->required();
  app.add_option("--max-len", options.max_len,
                 "longest trading transform searched for explicit games")
      ->check(CLI::Range(2, 16));
  app.add_flag("--explicit-output", options.explicit_output,
               "print resulting games as explicit documents");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : hiergames::kExitUsage;
  }

  const auto command = hiergames::ParseCommand(command_name);
  if (!command) {
    std::cerr << "error: unknown command '" << command_name << "'\n";
    return hiergames::kExitUsage;
  }

  std::stringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << path << '\n';
      return hiergames::kExitUsage;
    }
    text << in.rdbuf();
  }

  try {
    const hiergames::GameDocument doc = hiergames::ParseDocument(text.str());
    std::cout << hiergames::RunCommand(*command, doc, options);
  } catch (const hiergames::Error& e) {
    std::cerr << "error: " << hiergames::ErrorCodeName(e.code()) << ": " << e.what()
              << '\n';
    return hiergames::ExitCodeFor(e);
  }
  return hiergames::kExitOk;
}
