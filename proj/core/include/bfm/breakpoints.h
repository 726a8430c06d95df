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

// Allocation rules report the bids of one watched agent at which one of
// their comparisons would tie. The threshold payment engine uses these as
// candidates for the exact threshold.

#ifndef BFM_BREAKPOINTS_H_
#define BFM_BREAKPOINTS_H_

#include <vector>

#include "bfm/rational.h"

namespace bfm {

class BreakpointLog {
 public:
  // Installs the log for the current thread until destruction.
  explicit BreakpointLog(int agent);
  ~BreakpointLog();
  BreakpointLog(const BreakpointLog&) = delete;
  BreakpointLog& operator=(const BreakpointLog&) = delete;

  int agent() const { return agent_; }
  const std::vector<Rational>& points() const { return points_; }
  void Add(const Rational& bid) { points_.push_back(bid); }

  static BreakpointLog* Current();

 private:
  int agent_;
  std::vector<Rational> points_;
  BreakpointLog* previous_;
};

// The log watching `agent` on this thread, or nullptr.
inline BreakpointLog* WatchingAgent(int agent) {
  BreakpointLog* log = BreakpointLog::Current();
  return log != nullptr && log->agent() == agent ? log : nullptr;
}

}  // namespace bfm

#endif  // BFM_BREAKPOINTS_H_
