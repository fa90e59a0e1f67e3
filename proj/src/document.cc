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

#include "hiergames/document.h"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "hiergames/error.h"

namespace hiergames {
namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

// Integers of one line, with the column of each.
struct Field {
  int line = 0;
  int column = 0;
  std::vector<int> values;
  std::vector<int> columns;
};

std::vector<Token> Tokenize(std::string_view line, size_t from) {
  std::vector<Token> tokens;
  size_t i = from;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

Field ParseIntegers(std::string_view line, size_t from, int line_no) {
  Field field;
  field.line = line_no;
  field.column = static_cast<int>(from) + 1;
  for (const Token& t : Tokenize(line, from)) {
    int value = 0;
    const char* begin = t.text.data();
    const char* end = begin + t.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      throw ParseError(ErrorCode::kParse, line_no, t.column,
                       "expected an integer, found '" + std::string(t.text) + "'");
    }
    field.values.push_back(value);
    field.columns.push_back(t.column);
  }
  return field;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void Invalid(int line, int column, const std::string& reason) {
  throw ParseError(ErrorCode::kValidation, line, column, reason);
}

void CheckPositive(const Field& f, const char* what) {
  for (size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i] < 1) {
      Invalid(f.line, f.columns[i], std::string(what) + " entries must be positive");
    }
  }
}

std::string JoinInts(const std::vector<int>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i];
  }
  return out.str();
}

}  // namespace

GameDocument ParseDocument(std::string_view text) {
  std::optional<DocumentKind> kind;
  std::optional<Field> n_field, k_field;
  std::optional<int> rows_line;
  std::vector<Field> rows;
  bool in_rows = false;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    const size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      if (!in_rows) {
        throw ParseError(ErrorCode::kParse, line_no, static_cast<int>(first) + 1,
                         "expected 'key: value'");
      }
      rows.push_back(ParseIntegers(line, first, line_no));
      continue;
    }

    in_rows = false;
    const std::string_view key = Trim(line.substr(0, colon));
    const size_t value_from = colon + 1;
    const int key_column = static_cast<int>(first) + 1;
    auto duplicate = [&](bool seen) {
      if (seen) {
        throw ParseError(ErrorCode::kParse, line_no, key_column,
                         "duplicate key '" + std::string(key) + "'");
      }
    };

    if (key == "kind") {
      duplicate(kind.has_value());
      const std::string_view value = Trim(line.substr(value_from));
      const size_t value_at = line.find_first_not_of(" \t", value_from);
      const int column =
          static_cast<int>(value_at == std::string_view::npos ? value_from : value_at) + 1;
      if (value == "disjunctive") {
        kind = DocumentKind::kDisjunctive;
      } else if (value == "conjunctive") {
        kind = DocumentKind::kConjunctive;
      } else if (value == "explicit") {
        kind = DocumentKind::kExplicit;
      } else {
        throw ParseError(ErrorCode::kParse, line_no, column,
                         "unknown kind '" + std::string(value) + "'");
      }
    } else if (key == "n" || key == "k") {
      std::optional<Field>& slot = key == "n" ? n_field : k_field;
      duplicate(slot.has_value());
      slot = ParseIntegers(line, value_from, line_no);
      if (slot->values.empty()) {
        throw ParseError(ErrorCode::kParse, line_no, static_cast<int>(value_from) + 1,
                         "expected at least one integer");
      }
    } else if (key == "min_winning") {
      duplicate(rows_line.has_value());
      if (!Trim(line.substr(value_from)).empty()) {
        throw ParseError(ErrorCode::kParse, line_no, static_cast<int>(value_from) + 1,
                         "coalitions go on the lines after 'min_winning:'");
      }
      rows_line = line_no;
      in_rows = true;
    } else {
      throw ParseError(ErrorCode::kParse, line_no, key_column,
                       "unknown key '" + std::string(key) + "'");
    }
  }
  const int end_line =
      !text.empty() && text.back() == '\n' ? std::max(1, line_no - 1) : line_no;

  if (!kind) throw ParseError(ErrorCode::kParse, end_line, 1, "missing 'kind'");
  if (!n_field) throw ParseError(ErrorCode::kParse, end_line, 1, "missing 'n'");
  CheckPositive(*n_field, "n");

  GameDocument doc;
  doc.kind = *kind;
  doc.n = n_field->values;
  const size_t m = doc.n.size();

  if (doc.hierarchical()) {
    if (!k_field) throw ParseError(ErrorCode::kParse, end_line, 1, "missing 'k'");
    if (rows_line) {
      Invalid(*rows_line, 1, "min_winning is only allowed for kind: explicit");
    }
    const Field& k = *k_field;
    if (k.values.size() != m) {
      Invalid(k.line, k.column,
              "k has " + std::to_string(k.values.size()) + " entries, n has " +
                  std::to_string(m));
    }
    CheckPositive(k, "k");
    for (size_t i = 1; i < m; ++i) {
      const bool weak_ok = doc.kind == DocumentKind::kConjunctive && i + 1 == m;
      if (k.values[i] < k.values[i - 1] || (k.values[i] == k.values[i - 1] && !weak_ok)) {
        Invalid(k.line, k.columns[i],
                doc.kind == DocumentKind::kDisjunctive
                    ? "k must be strictly increasing"
                    : "k must increase (the last two entries may be equal)");
      }
    }
    doc.k = k.values;
    return doc;
  }

  if (k_field) Invalid(k_field->line, k_field->column, "k is not allowed for kind: explicit");
  if (!rows_line) throw ParseError(ErrorCode::kParse, end_line, 1, "missing 'min_winning'");
  if (rows.empty()) Invalid(*rows_line, 1, "min_winning needs at least one coalition");
  for (size_t r = 0; r < rows.size(); ++r) {
    const Field& row = rows[r];
    if (row.values.size() != m) {
      Invalid(row.line, row.column,
              "coalition has " + std::to_string(row.values.size()) +
                  " entries, n has " + std::to_string(m));
    }
    for (size_t i = 0; i < m; ++i) {
      if (row.values[i] < 0 || row.values[i] > doc.n[i]) {
        Invalid(row.line, row.columns[i],
                "count " + std::to_string(row.values[i]) + " is outside 0.." +
                    std::to_string(doc.n[i]));
      }
    }
    for (size_t s = 0; s < r; ++s) {
      const Coalition a(rows[s].values);
      const Coalition b(row.values);
      if (a.IsSubsetOf(b) || b.IsSubsetOf(a)) {
        Invalid(row.line, row.column,
                "coalition " + b.ToString() + " is comparable with " + a.ToString() +
                    " on line " + std::to_string(rows[s].line));
      }
    }
    doc.min_winning.push_back(row.values);
  }
  return doc;
}

std::string SerializeDocument(const GameDocument& doc) {
  std::ostringstream out;
  out << "kind: ";
  switch (doc.kind) {
    case DocumentKind::kDisjunctive: out << "disjunctive"; break;
    case DocumentKind::kConjunctive: out << "conjunctive"; break;
    case DocumentKind::kExplicit: out << "explicit"; break;
  }
  out << "\nn: " << JoinInts(doc.n) << '\n';
  if (doc.hierarchical()) {
    out << "k: " << JoinInts(doc.k) << '\n';
  } else {
    out << "min_winning:\n";
    for (const auto& row : doc.min_winning) out << JoinInts(row) << '\n';
  }
  return out.str();
}

HierarchyParams ToParams(const GameDocument& doc) {
  if (!doc.hierarchical()) {
    throw Error(ErrorCode::kInvalidParams, "explicit document has no hierarchy parameters");
  }
  return HierarchyParams{doc.kind == DocumentKind::kDisjunctive
                             ? HierarchyKind::kDisjunctive
                             : HierarchyKind::kConjunctive,
                         doc.n, doc.k};
}

MultisetGame ToGame(const GameDocument& doc) {
  if (doc.hierarchical()) return Build(ToParams(doc));
  std::vector<Coalition> rows;
  for (const auto& row : doc.min_winning) rows.emplace_back(row);
  return MultisetGame(PlayerMultiset(doc.n), std::move(rows));
}

GameDocument FromParams(const HierarchyParams& p) {
  GameDocument doc;
  doc.kind = p.kind == HierarchyKind::kDisjunctive ? DocumentKind::kDisjunctive
                                                    : DocumentKind::kConjunctive;
  doc.n = p.n;
  doc.k = p.k;
  return doc;
}

GameDocument FromGame(const MultisetGame& game) {
  GameDocument doc;
  doc.kind = DocumentKind::kExplicit;
  doc.n = game.players().sizes();
  for (const Coalition& c : game.min_winning()) doc.min_winning.push_back(c.counts());
  return doc;
}

}  // namespace hiergames
