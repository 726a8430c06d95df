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

#include "bfm/agent_set.h"

#include <stdexcept>

namespace bfm {

AgentSet AgentSet::Of(const std::vector<int>& agents) {
  AgentSet s;
  for (int i : agents) {
    if (i < 0 || i >= kMaxAgents) throw std::out_of_range("agent index");
    s = s.with(i);
  }
  return s;
}

std::vector<int> AgentSet::ToVector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i : *this) out.push_back(i);
  return out;
}

std::string AgentSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int i : *this) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

bool LexLess(AgentSet a, AgentSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int low = std::countr_zero(diff);
  const std::uint64_t above = ~((std::uint64_t{2} << low) - 1);
  if (a.contains(low)) {
    // a has `low` where b moves on to its next larger member, if any.
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

SubsetEnumerator::SubsetEnumerator(AgentSet ground)
    : members_(ground.ToVector()) {
  if (members_.size() > 30) {
    throw std::length_error("subset enumeration over more than 30 agents");
  }
}

AgentSet SubsetEnumerator::At(std::uint64_t rank) const {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; rank != 0; ++k, rank >>= 1) {
    if (rank & 1) bits |= std::uint64_t{1} << members_[k];
  }
  return AgentSet(bits);
}

}  // namespace bfm
