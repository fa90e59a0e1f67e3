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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hiergames/document.h"
#include "hiergames/error.h"
#include "hiergames/game.h"
#include "hiergames/hierarchy.h"
#include "hiergames/oracle.h"
#include "hiergames/report.h"
#include "hiergames/weighted.h"
#include "test_support.h"

namespace hiergames {
namespace {

constexpr int kSweepLevels = 4;
constexpr int kSweepPlayers = 9;
constexpr int kSearchLength = 4;
constexpr int kRandomCanonicalizations = 200;
constexpr double kSweepBudgetSeconds = 300.0;
constexpr unsigned kSeed = 20260101;

constexpr auto kDis = HierarchyKind::kDisjunctive;
constexpr auto kCon = HierarchyKind::kConjunctive;

struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first_failure;

  void Expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what;
  }
};

bool Report(int id, const char* name, const Tally& t, const std::string& extra = "") {
  const bool pass = t.failed == 0 && t.checked > 0;
  std::printf("%s %d %s: %ld checks, %ld failures%s%s%s\n", pass ? "PASS" : "FAIL", id,
              name, t.checked, t.failed, extra.empty() ? "" : ", ", extra.c_str(),
              t.failed ? (" (first: " + t.first_failure + ")").c_str() : "");
  std::fflush(stdout);
  return pass;
}

bool Guarded(Tally& t, const std::string& what, const std::function<void()>& body) {
  try {
    body();
    return true;
  } catch (const std::exception& e) {
    t.Expect(false, what + " threw: " + e.what());
    return false;
  }
}

// Weightedness rules against exact feasibility and trading-transform search.
bool WeightednessSweep(int id, const char* name, HierarchyKind kind) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  long weighted = 0;
  const auto grid = testing::CanonicalGrid(kind, kSweepLevels, kSweepPlayers);
  for (const HierarchyParams& p : grid) {
    const std::string tag = p.ToString();
    Guarded(t, tag, [&] {
      const MultisetGame g = Build(p);
      const bool rule = IsWeighted(p).weighted;
      const auto rep = SynthesizeWeights(g);
      const bool found = SearchTradingTransform(g, kSearchLength).has_value();
      t.Expect(rule == rep.has_value(), tag + ": rule vs feasibility");
      t.Expect(rule == !found, tag + ": rule vs search");
      if (rep) t.Expect(rep->Separates(g), tag + ": representation separates");
      if (kind == kCon) {
        t.Expect(rule == IsWeightedDisjunctive(DualParams(p)).weighted,
                 tag + ": dual decision");
      }
      weighted += rule ? 1 : 0;
    });
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.Expect(seconds <= kSweepBudgetSeconds, "runtime budget");
  std::ostringstream extra;
  extra << grid.size() << " games, " << weighted << " weighted, " << std::fixed;
  extra.precision(1);
  extra << seconds << "s";
  return Report(id, name, t, extra.str());
}

bool DualitySweep() {
  Tally t;
  for (auto kind : {kDis, kCon}) {
    for (const HierarchyParams& p : testing::CanonicalGrid(kind, kSweepLevels, kSweepPlayers)) {
      const std::string tag = p.ToString();
      Guarded(t, tag, [&] {
        const HierarchyParams d = DualParams(p);
        t.Expect(GamesEqual(Dual(Build(p)), Build(d)), tag + ": dual game");
        t.Expect(DualParams(d) == p, tag + ": involution");
      });
    }
  }
  return Report(3, "duality", t);
}

std::vector<int> ShiftMaximalFormula(const HierarchyParams& p) {
  std::vector<int> ell;
  int prev = 0;
  for (size_t i = 0; i < p.k.size(); ++i) {
    if (i + 1 == p.k.size() && HasDummyLevel(p)) {
      ell.push_back(p.n[i]);
    } else {
      ell.push_back(p.k[i] - prev - (i == 0 ? 1 : 0));
    }
    prev = p.k[i];
  }
  return ell;
}

bool StructureSweep() {
  Tally t;
  for (const HierarchyParams& p : testing::CanonicalGrid(kDis, kSweepLevels, kSweepPlayers)) {
    const std::string tag = p.ToString();
    Guarded(t, tag, [&] {
      const MultisetGame g = Build(p);
      t.Expect(ShiftMaximalLosing(g) ==
                   std::vector<Coalition>{Coalition(ShiftMaximalFormula(p))},
               tag + ": shift-maximal losing");
      t.Expect(RecognizeDisjunctive(g) == p, tag + ": recognize");
    });
  }
  for (const HierarchyParams& p : testing::CanonicalGrid(kCon, kSweepLevels, kSweepPlayers)) {
    const std::string tag = p.ToString();
    Guarded(t, tag, [&] {
      const MultisetGame g = Build(p);
      std::vector<int> expected;
      int prev = 0;
      for (int k : p.k) {
        expected.push_back(k - prev);
        prev = k;
      }
      t.Expect(ShiftMinimalWinning(g) == std::vector<Coalition>{Coalition(expected)},
               tag + ": shift-minimal winning");
      // One level: the same game is reported as disjunctive.
      HierarchyParams want = p;
      if (p.levels() == 1) want.kind = kDis;
      t.Expect(RecognizeConjunctive(g) == want, tag + ": recognize");
    });
  }
  return Report(4, "structure", t);
}

bool CertificateSweep() {
  Tally t;
  long certificates = 0;
  for (auto kind : {kDis, kCon}) {
    for (const HierarchyParams& p : testing::CanonicalGrid(kind, kSweepLevels, kSweepPlayers)) {
      const std::string tag = p.ToString();
      Guarded(t, tag, [&] {
        const MultisetGame g = Build(p);
        if (IsWeighted(p).weighted) {
          t.Expect(!SearchTradingTransform(g, kSearchLength).has_value(),
                   tag + ": weighted game has a transform");
        } else {
          t.Expect(VerifyTradingTransform(g, CertificateOfNonweightedness(p)),
                   tag + ": certificate");
          ++certificates;
        }
      });
    }
  }
  return Report(5, "certificates", t, std::to_string(certificates) + " certificates");
}

bool NamedExamples() {
  Tally t;
  Guarded(t, "security council", [&] {
    const HierarchyParams p{kCon, {5, 10}, {5, 9}};
    t.Expect(IsWeighted(p) == WeightednessDecision{true, 4}, "security council: case (4)");
    const auto rep = SynthesizeWeights(Build(p));
    t.Expect(rep.has_value() && rep->Separates(Build(p)), "security council: representation");
  });
  Guarded(t, "bank", [&] {
    const HierarchyParams p{kDis, {2, 3}, {2, 3}};
    t.Expect(IsWeighted(p) == WeightednessDecision{true, 2}, "bank: case (2)");
  });
  Guarded(t, "two-level", [&] {
    const HierarchyParams p{kDis, {2, 4}, {2, 4}};
    t.Expect(!IsWeighted(p).weighted, "two-level: not weighted");
    const TradingTransform cert = CertificateOfNonweightedness(p);
    t.Expect(cert.ToString() == "({(2,0)},{(0,4)};{(1,2)},{(1,2)})", "two-level: certificate");
    t.Expect(VerifyTradingTransform(Build(p), cert), "two-level: verified");
  });
  return Report(6, "named examples", t);
}

HierarchyParams RandomParams(std::mt19937& rng) {
  const HierarchyKind kind = std::uniform_int_distribution<int>(0, 1)(rng) ? kDis : kCon;
  const int m = std::uniform_int_distribution<int>(1, 4)(rng);
  HierarchyParams p{kind, {}, {}};
  int prev = 0;
  for (int i = 0; i < m; ++i) {
    p.n.push_back(std::uniform_int_distribution<int>(1, 4)(rng));
    const bool tie = kind == kCon && i > 0 && i + 1 == m;
    prev = std::uniform_int_distribution<int>(prev + (tie ? 0 : 1), prev + 5)(rng);
    p.k.push_back(prev);
  }
  return p;
}

bool RandomCanonicalization() {
  Tally t;
  std::mt19937 rng(kSeed);
  int accepted = 0;
  while (accepted < kRandomCanonicalizations) {
    const HierarchyParams p = RandomParams(rng);
    if (IsCanonical(p)) continue;
    MultisetGame original = BuildDisjunctive({1}, {1});
    try {
      original = Build(p);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kEmptyWinningSet) continue;
      throw;
    }
    ++accepted;
    const std::string tag = p.ToString();
    Guarded(t, tag, [&] {
      const HierarchyParams canon = CanonicalParams(p);
      t.Expect(IsCanonical(canon), tag + ": output canonical");
      // Merged levels change the player multiset, so compare player by player.
      t.Expect(GamesEqual(Expand(original).game, Expand(Build(canon)).game),
               tag + ": same game");
    });
  }
  return Report(7, "canonicalization", t);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool Goldens() {
  Tally t;
  const std::string dir = HIERGAMES_GOLDEN_DIR;
  const std::vector<std::pair<std::string, Command>> commands = {
      {"build", Command::kBuild},         {"canonical", Command::kCanonical},
      {"dual", Command::kDual},           {"analyze", Command::kAnalyze},
      {"weighted", Command::kWeighted},   {"certificate", Command::kCertificate},
      {"recognize", Command::kRecognize}};
  for (const char* game : {"unsc", "bank", "two_level", "explicit"}) {
    for (const auto& [name, command] : commands) {
      const std::string tag = std::string(game) + "." + name;
      Guarded(t, tag, [&] {
        const GameDocument doc = ParseDocument(ReadFile(dir + "/" + game + ".game"));
        t.Expect(RunCommand(command, doc) == ReadFile(dir + "/" + tag + ".out"), tag);
      });
    }
  }
  return Report(8, "cli goldens", t);
}

}  // namespace
}  // namespace hiergames

int main() {
  using namespace hiergames;
  bool ok = true;
  ok &= WeightednessSweep(1, "disjunctive weightedness sweep", kDis);
  ok &= WeightednessSweep(2, "conjunctive weightedness sweep", kCon);
  ok &= DualitySweep();
  ok &= StructureSweep();
  ok &= CertificateSweep();
  ok &= NamedExamples();
  ok &= RandomCanonicalization();
  ok &= Goldens();
  return ok ? 0 : 1;
}
