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

#include "hiergames/report.h"

#include <map>
#include <numeric>
#include <sstream>

#include "hiergames/oracle.h"

namespace hiergames {
namespace {

std::string Row(const Coalition& c) {
  std::ostringstream out;
  for (int i = 0; i < c.levels(); ++i) {
    if (i) out << ' ';
    out << c[i];
  }
  return out.str();
}

std::string Ints(const std::vector<int>& v) { return Row(Coalition(v)); }

std::string GameLine(const GameDocument& doc) {
  if (doc.hierarchical()) return ToParams(doc).ToString();
  return "explicit n=(" + Ints(doc.n) + ")";
}

std::string Describe(const WeightednessDecision& d) {
  if (!d.weighted) return "not weighted";
  return "weighted, case (" + std::to_string(d.rule) + ")";
}

void Coalitions(std::ostream& out, const char* field,
                const std::vector<Coalition>& cs) {
  if (cs.empty()) out << field << ": none\n";
  for (const Coalition& c : cs) out << field << ": " << Row(c) << '\n';
}

void Weights(std::ostream& out, const MultisetGame& game) {
  const std::optional<WeightedRepresentation> rep = SynthesizeWeights(game);
  if (!rep) {
    out << "weights: none\n";
    return;
  }
  out << "weights:";
  for (const Rational& w : rep->weights) out << ' ' << FormatRational(w);
  out << "\nquota: " << FormatRational(rep->quota) << '\n';
  out << "separates: " << (rep->Separates(game) ? "true" : "false") << '\n';
}

// Canonical parameters, noting the normalization when it changed anything.
HierarchyParams Canonical(std::ostream& out, const GameDocument& doc) {
  const HierarchyParams p = ToParams(doc);
  const HierarchyParams canon = CanonicalParams(p);
  if (canon != p) out << "canonical: " << canon.ToString() << '\n';
  return canon;
}

std::optional<HierarchyParams> Recognize(const MultisetGame& game) {
  if (auto p = RecognizeDisjunctive(game)) return p;
  return RecognizeConjunctive(game);
}

void Certificate(std::ostream& out, const MultisetGame& game,
                 const TradingTransform& t) {
  out << "certificate: " << t.ToString() << '\n';
  out << "length: " << t.length() << '\n';
  out << "verified: " << (VerifyTradingTransform(game, t) ? "true" : "false") << '\n';
}

std::string Build(const GameDocument& doc, const RunOptions& options) {
  const MultisetGame game = ToGame(doc);
  if (options.explicit_output) return SerializeDocument(FromGame(game));
  std::ostringstream out;
  out << "command: build\n";
  out << "game: " << GameLine(doc) << '\n';
  out << "min_winning_count: " << game.min_winning().size() << '\n';
  Coalitions(out, "min_winning", game.min_winning());
  return out.str();
}

std::string CanonicalCommand(const GameDocument& doc, const RunOptions& options) {
  std::ostringstream out;
  out << "command: canonical\n";
  out << "game: " << GameLine(doc) << '\n';
  if (doc.hierarchical()) {
    const HierarchyParams p = ToParams(doc);
    const HierarchyParams canon = CanonicalParams(p);
    if (options.explicit_output) return SerializeDocument(FromGame(hiergames::Build(canon)));
    out << "canonical: " << canon.ToString() << '\n';
    out << "changed: " << (canon != p ? "true" : "false") << '\n';
    return out.str();
  }
  const MultisetGame game = ToGame(doc);
  const ExpandedGame expanded = Expand(game);
  const MultisetGame canon = CanonicalizeSetGame(expanded.game);
  if (options.explicit_output) return SerializeDocument(FromGame(canon));
  const auto classes = EquivalenceClasses(expanded.game);
  std::vector<int> level_map(static_cast<size_t>(game.levels()), 0);
  for (size_t c = 0; c < classes.size(); ++c) {
    for (int player : classes[c]) {
      level_map[static_cast<size_t>(
          expanded.level_of_player[static_cast<size_t>(player)])] =
          static_cast<int>(c) + 1;
    }
  }
  std::vector<int> identity(level_map.size());
  std::iota(identity.begin(), identity.end(), 1);
  out << "canonical_players: " << Ints(canon.players().sizes()) << '\n';
  out << "level_map: " << Ints(level_map) << '\n';
  Coalitions(out, "min_winning", canon.min_winning());
  out << "changed: " << (level_map != identity ? "true" : "false") << '\n';
  return out.str();
}

std::string DualCommand(const GameDocument& doc, const RunOptions& options) {
  std::ostringstream out;
  out << "command: dual\n";
  out << "game: " << GameLine(doc) << '\n';
  if (doc.hierarchical()) {
    const HierarchyParams canon = Canonical(out, doc);
    const HierarchyParams dual = DualParams(canon);
    const MultisetGame game = hiergames::Build(dual);
    if (options.explicit_output) return SerializeDocument(FromGame(game));
    out << "dual: " << dual.ToString() << '\n';
    Coalitions(out, "min_winning", game.min_winning());
    return out.str();
  }
  const MultisetGame dual = Dual(ToGame(doc));
  if (options.explicit_output) return SerializeDocument(FromGame(dual));
  out << "dual: explicit n=(" << Ints(dual.players().sizes()) << ")\n";
  Coalitions(out, "min_winning", dual.min_winning());
  return out.str();
}

std::string Analyze(const GameDocument& doc) {
  const MultisetGame game = ToGame(doc);
  const int m = game.levels();
  std::ostringstream out;
  out << "command: analyze\n";
  out << "game: " << GameLine(doc) << '\n';

  std::vector<std::vector<Desirability>> cmp(
      static_cast<size_t>(m), std::vector<Desirability>(static_cast<size_t>(m)));
  bool complete = true;
  bool ordered = true;
  bool strict = true;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Desirability d = IsbellCompare(game, i, j);
      cmp[static_cast<size_t>(i)][static_cast<size_t>(j)] = d;
      if (d == Desirability::kIncomparable) complete = false;
      if (i < j && d != Desirability::kMore) {
        strict = false;
        if (d != Desirability::kEquivalent) ordered = false;
      }
    }
  }
  std::vector<int> class_of(static_cast<size_t>(m), -1);
  int classes = 0;
  for (int i = 0; i < m; ++i) {
    if (class_of[static_cast<size_t>(i)] >= 0) continue;
    for (int j = i; j < m; ++j) {
      if (cmp[static_cast<size_t>(i)][static_cast<size_t>(j)] == Desirability::kEquivalent) {
        class_of[static_cast<size_t>(j)] = classes;
      }
    }
    ++classes;
  }
  out << "complete: " << (complete ? "true" : "false") << '\n';
  out << "equivalence_classes: " << classes << '\n';
  if (complete && ordered) {
    out << "level_order: " << (strict ? "strict" : "weak") << '\n';
    Coalitions(out, "shift_minimal_winning", ShiftMinimalWinning(game));
    Coalitions(out, "shift_maximal_losing", ShiftMaximalLosing(game));
  } else {
    out << "level_order: " << (complete ? "unordered" : "partial") << '\n';
    out << "shift_minimal_winning: n/a\n";
    out << "shift_maximal_losing: n/a\n";
  }
  std::vector<int> dummies;
  for (int i = 0; i < m; ++i) {
    bool used = false;
    for (const Coalition& w : game.min_winning()) used = used || w[i] > 0;
    if (!used) dummies.push_back(i + 1);
  }
  out << "dummy_levels: " << (dummies.empty() ? "none" : Ints(dummies)) << '\n';
  return out.str();
}

std::string WeightedCommand(const GameDocument& doc) {
  std::ostringstream out;
  out << "command: weighted\n";
  out << "game: " << GameLine(doc) << '\n';
  if (doc.hierarchical()) {
    const HierarchyParams canon = Canonical(out, doc);
    out << "decision: " << Describe(IsWeighted(canon)) << '\n';
    if (IsWeighted(canon).weighted) Weights(out, hiergames::Build(canon));
    return out.str();
  }
  const MultisetGame game = ToGame(doc);
  if (const auto p = Recognize(game)) {
    out << "recognized: " << p->ToString() << '\n';
    const WeightednessDecision d = IsWeighted(*p);
    out << "decision: " << Describe(d) << '\n';
    if (d.weighted) Weights(out, game);
    return out.str();
  }
  out << "recognized: not hierarchical\n";
  const bool weighted = SynthesizeWeights(game).has_value();
  out << "decision: " << (weighted ? "weighted" : "not weighted")
      << " (exact feasibility)\n";
  if (weighted) Weights(out, game);
  return out.str();
}

std::string CertificateCommand(const GameDocument& doc, const RunOptions& options) {
  std::ostringstream out;
  out << "command: certificate\n";
  out << "game: " << GameLine(doc) << '\n';
  std::optional<HierarchyParams> params;
  MultisetGame game = ToGame(doc);
  if (doc.hierarchical()) {
    params = Canonical(out, doc);
    game = hiergames::Build(*params);
  } else {
    params = Recognize(game);
    out << "recognized: " << (params ? params->ToString() : "not hierarchical") << '\n';
  }
  if (params) {
    const WeightednessDecision d = IsWeighted(*params);
    out << "decision: " << Describe(d) << '\n';
    if (d.weighted) {
      out << "certificate: none\n";
    } else {
      Certificate(out, game, CertificateOfNonweightedness(*params));
    }
    return out.str();
  }
  out << "search_max_len: " << options.max_len << '\n';
  if (const auto t = SearchTradingTransform(game, options.max_len)) {
    Certificate(out, game, *t);
  } else {
    out << "certificate: none\n";
  }
  return out.str();
}

std::string RecognizeCommand(const GameDocument& doc) {
  const MultisetGame game = ToGame(doc);
  std::ostringstream out;
  out << "command: recognize\n";
  out << "game: " << GameLine(doc) << '\n';
  std::vector<HierarchyParams> found;
  for (const auto& p : {RecognizeDisjunctive(game), RecognizeConjunctive(game)}) {
    if (p && (found.empty() || found.front() != *p)) found.push_back(*p);
  }
  if (found.empty()) out << "recognized: not hierarchical\n";
  for (const HierarchyParams& p : found) out << "recognized: " << p.ToString() << '\n';
  return out.str();
}

}  // namespace

std::optional<Command> ParseCommand(std::string_view name) {
  static const std::map<std::string_view, Command> kCommands = {
      {"build", Command::kBuild},         {"canonical", Command::kCanonical},
      {"dual", Command::kDual},           {"analyze", Command::kAnalyze},
      {"weighted", Command::kWeighted},   {"certificate", Command::kCertificate},
      {"recognize", Command::kRecognize},
  };
  const auto it = kCommands.find(name);
  if (it == kCommands.end()) return std::nullopt;
  return it->second;
}

std::string RunCommand(Command command, const GameDocument& doc,
                       const RunOptions& options) {
  switch (command) {
    case Command::kBuild: return Build(doc, options);
    case Command::kCanonical: return CanonicalCommand(doc, options);
    case Command::kDual: return DualCommand(doc, options);
    case Command::kAnalyze: return Analyze(doc);
    case Command::kWeighted: return WeightedCommand(doc);
    case Command::kCertificate: return CertificateCommand(doc, options);
    case Command::kRecognize: return RecognizeCommand(doc);
  }
  return {};
}

int ExitCodeFor(const Error& error) {
  switch (error.code()) {
    case ErrorCode::kParse:
      return kExitParse;
    case ErrorCode::kValidation:
    case ErrorCode::kInvalidParams:
    case ErrorCode::kInvalidGame:
    case ErrorCode::kInvalidCoalition:
    case ErrorCode::kEmptyWinningSet:
      return kExitValidation;
    case ErrorCode::kCapacityExceeded:
      return kExitCapacity;
    default:
      return kExitUsage;
  }
}

}  // namespace hiergames
