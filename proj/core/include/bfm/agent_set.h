// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BFM_AGENT_SET_H_
#define BFM_AGENT_SET_H_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace bfm {

// Agents are 0-based internally; everything user facing prints 1-based ids.
inline constexpr int kMaxAgents = 62;

class AgentSet {
 public:
  constexpr AgentSet() = default;
  constexpr explicit AgentSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr AgentSet Full(int n) {
    return AgentSet(n >= 64 ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << n) - 1);
  }
  static constexpr AgentSet Single(int i) {
    return AgentSet(std::uint64_t{1} << i);
  }
  static AgentSet Of(const std::vector<int>& agents);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
  constexpr AgentSet with(int i) const {
    return AgentSet(bits_ | (std::uint64_t{1} << i));
  }
  constexpr AgentSet without(int i) const {
    return AgentSet(bits_ & ~(std::uint64_t{1} << i));
  }
  constexpr bool IsSubsetOf(AgentSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Lowest agent, -1 when empty.
  constexpr int front() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }

  constexpr AgentSet operator|(AgentSet o) const {
    return AgentSet(bits_ | o.bits_);
  }
  constexpr AgentSet operator&(AgentSet o) const {
    return AgentSet(bits_ & o.bits_);
  }
  constexpr AgentSet operator-(AgentSet o) const {
    return AgentSet(bits_ & ~o.bits_);
  }
  constexpr bool operator==(const AgentSet&) const = default;

  class Iterator {
   public:
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const Iterator& o) const {
      return rest_ != o.rest_;
    }

   private:
    std::uint64_t rest_;
  };
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> ToVector() const;
  // "{1,3}" with 1-based ids.
  std::string ToString() const;

 private:
  std::uint64_t bits_ = 0;
};

// Lexicographic order of the sorted member lists ({1} < {1,2} < {2}).
bool LexLess(AgentSet a, AgentSet b);

// Enumerates all subsets of `ground` in increasing order of their rank, where
// the rank of a subset is its bitmask compressed onto the positions of
// `ground`. Subset 0 is the empty set.
class SubsetEnumerator {
 public:
  explicit SubsetEnumerator(AgentSet ground);
  std::uint64_t count() const { return std::uint64_t{1} << members_.size(); }
  AgentSet At(std::uint64_t rank) const;
  const std::vector<int>& members() const { return members_; }

 private:
  std::vector<int> members_;
};

}  // namespace bfm

#endif  // BFM_AGENT_SET_H_
