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

#ifndef HIERGAMES_COALITION_H_
#define HIERGAMES_COALITION_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hiergames {

// A submultiset of the player multiset, stored as one count per level.
// Level 0 is the most desirable level.
class Coalition {
 public:
  Coalition() = default;
  explicit Coalition(std::vector<int> counts) : counts_(std::move(counts)) {}

  static Coalition Empty(int levels) {
    return Coalition(std::vector<int>(static_cast<size_t>(levels), 0));
  }

  int levels() const { return static_cast<int>(counts_.size()); }
  const std::vector<int>& counts() const { return counts_; }
  int operator[](int level) const { return counts_[static_cast<size_t>(level)]; }
  int& operator[](int level) { return counts_[static_cast<size_t>(level)]; }

  int total() const;

  // Submultiset relation: every level count is at most the other's.
  bool IsSubsetOf(const Coalition& other) const;

  Coalition& operator+=(const Coalition& other);
  Coalition& operator-=(const Coalition& other);
  friend Coalition operator+(Coalition a, const Coalition& b) { return a += b; }
  friend Coalition operator-(Coalition a, const Coalition& b) { return a -= b; }

  // Lexicographic on the count vector.
  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend auto operator<=>(const Coalition&, const Coalition&) = default;

  // "(2,0,1)"
  std::string ToString() const;

 private:
  std::vector<int> counts_;
};

// The multiset {1^{n_1}, ..., m^{n_m}} of players. Every level is non-empty.
class PlayerMultiset {
 public:
  PlayerMultiset() = default;
  explicit PlayerMultiset(std::vector<int> sizes);

  int levels() const { return static_cast<int>(sizes_.size()); }
  int size(int level) const { return sizes_[static_cast<size_t>(level)]; }
  const std::vector<int>& sizes() const { return sizes_; }
  int total() const;

  Coalition Full() const { return Coalition(sizes_); }
  Coalition Complement(const Coalition& c) const;

  // True when c has one count per level and 0 <= c_i <= n_i.
  bool Admits(const Coalition& c) const;
  // Throws kInvalidCoalition unless Admits(c).
  void Validate(const Coalition& c) const;

  // prod (n_i + 1), saturating at UINT64_MAX.
  std::uint64_t CoalitionCount() const;

  friend bool operator==(const PlayerMultiset&, const PlayerMultiset&) = default;

 private:
  std::vector<int> sizes_;
};

// Upper bound on prod (n_i + 1) for any exhaustive enumeration. Defaults to
// 2^24, or the value of HIERGAMES_CAPACITY when that is set.
std::uint64_t EnumerationLimit();
void SetEnumerationLimit(std::uint64_t limit);

// Throws kCapacityExceeded when the coalition space is above the limit.
void CheckEnumerable(const PlayerMultiset& players);

// Visits every coalition of `players` in lexicographic order.
template <typename Fn>
void ForEachCoalition(const PlayerMultiset& players, Fn&& fn) {
  CheckEnumerable(players);
  Coalition c = Coalition::Empty(players.levels());
  const int m = players.levels();
  while (true) {
    fn(static_cast<const Coalition&>(c));
    int i = m - 1;
    while (i >= 0 && c[i] == players.size(i)) {
      c[i] = 0;
      --i;
    }
    if (i < 0) return;
    ++c[i];
  }
}

}  // namespace hiergames

#endif  // HIERGAMES_COALITION_H_
