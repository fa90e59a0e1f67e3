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

#include "hiergames/coalition.h"

#include <atomic>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "hiergames/error.h"

namespace hiergames {

int Coalition::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

bool Coalition::IsSubsetOf(const Coalition& other) const {
  if (other.levels() != levels()) return false;
  for (size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] > other.counts_[i]) return false;
  }
  return true;
}

Coalition& Coalition::operator+=(const Coalition& other) {
  if (other.levels() != levels()) {
    throw Error(ErrorCode::kInvalidCoalition, "coalition level mismatch");
  }
  for (size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

Coalition& Coalition::operator-=(const Coalition& other) {
  if (other.levels() != levels()) {
    throw Error(ErrorCode::kInvalidCoalition, "coalition level mismatch");
  }
  for (size_t i = 0; i < counts_.size(); ++i) counts_[i] -= other.counts_[i];
  return *this;
}

std::string Coalition::ToString() const {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < counts_.size(); ++i) {
    if (i) out << ',';
    out << counts_[i];
  }
  out << ')';
  return out.str();
}

PlayerMultiset::PlayerMultiset(std::vector<int> sizes)
    : sizes_(std::move(sizes)) {
  for (int n : sizes_) {
    if (n < 1) {
      throw Error(ErrorCode::kInvalidGame, "every level needs at least one player");
    }
  }
}

int PlayerMultiset::total() const {
  return std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

Coalition PlayerMultiset::Complement(const Coalition& c) const {
  Validate(c);
  return Full() - c;
}

bool PlayerMultiset::Admits(const Coalition& c) const {
  if (c.levels() != levels()) return false;
  for (int i = 0; i < levels(); ++i) {
    if (c[i] < 0 || c[i] > sizes_[static_cast<size_t>(i)]) return false;
  }
  return true;
}

void PlayerMultiset::Validate(const Coalition& c) const {
  if (c.levels() != levels()) {
    throw Error(ErrorCode::kInvalidCoalition,
                "coalition " + c.ToString() + " has " +
                    std::to_string(c.levels()) + " levels, game has " +
                    std::to_string(levels()));
  }
  if (!Admits(c)) {
    throw Error(ErrorCode::kInvalidCoalition,
                "coalition " + c.ToString() + " exceeds level capacities");
  }
}

std::uint64_t PlayerMultiset::CoalitionCount() const {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (int n : sizes_) {
    const auto factor = static_cast<std::uint64_t>(n) + 1;
    if (count > kMax / factor) return kMax;
    count *= factor;
  }
  return count;
}

namespace {

std::uint64_t InitialLimit() {
  constexpr std::uint64_t kDefault = std::uint64_t{1} << 24;
  const char* env = std::getenv("HIERGAMES_CAPACITY");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || value == 0) return kDefault;
  return value;
}

std::atomic<std::uint64_t>& LimitSlot() {
  static std::atomic<std::uint64_t> limit{InitialLimit()};
  return limit;
}

}  // namespace

std::uint64_t EnumerationLimit() { return LimitSlot().load(); }

void SetEnumerationLimit(std::uint64_t limit) { LimitSlot().store(limit); }

void CheckEnumerable(const PlayerMultiset& players) {
  const std::uint64_t count = players.CoalitionCount();
  if (count > EnumerationLimit()) {
    throw Error(ErrorCode::kCapacityExceeded,
                "game has " + std::to_string(count) +
                    " coalitions, above the enumeration limit of " +
                    std::to_string(EnumerationLimit()));
  }
}

}  // namespace hiergames
