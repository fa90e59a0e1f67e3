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

#ifndef HIERGAMES_DOCUMENT_H_
#define HIERGAMES_DOCUMENT_H_

#include <string>
#include <string_view>
#include <vector>

#include "hiergames/game.h"
#include "hiergames/hierarchy.h"

namespace hiergames {

enum class DocumentKind { kDisjunctive, kConjunctive, kExplicit };

// Line-based game description:
//
//   kind: conjunctive            kind: explicit
//   n: 5 10                      n: 3 5
//   k: 5 9                       min_winning:
//                                0 4
//                                2 0
//
// Blank lines and lines starting with '#' are ignored.
struct GameDocument {
  DocumentKind kind = DocumentKind::kDisjunctive;
  std::vector<int> n;
  std::vector<int> k;
  std::vector<std::vector<int>> min_winning;

  bool hierarchical() const { return kind != DocumentKind::kExplicit; }

  friend bool operator==(const GameDocument&, const GameDocument&) = default;
};

// Throws ParseError (kParse for malformed text, kValidation for well-formed
// text describing an invalid game) with the offending line and column.
GameDocument ParseDocument(std::string_view text);

std::string SerializeDocument(const GameDocument& doc);

HierarchyParams ToParams(const GameDocument& doc);
MultisetGame ToGame(const GameDocument& doc);

GameDocument FromParams(const HierarchyParams& p);
// Explicit document listing the game's minimal winning coalitions.
GameDocument FromGame(const MultisetGame& game);

}  // namespace hiergames

#endif  // HIERGAMES_DOCUMENT_H_
