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

// Threshold payments of monotone allocation rules: the supremum bid at which
// an agent still wins, found by bisection on a fixed dyadic grid and snapped
// to an exact breakpoint when one can be confirmed.

#ifndef BFM_PAYMENTS_H_
#define BFM_PAYMENTS_H_

#include <functional>
#include <stdexcept>

#include "bfm/rational.h"

namespace bfm {

class NonMonotoneDetected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ThresholdOptions {
  // Bisection stops at width (B + 1) * 2^-bits.
  int bits = 40;
};

struct Threshold {
  Rational value;
  bool exact = false;      // a breakpoint was confirmed
  bool ever_wins = false;  // false when the agent loses even at bid 0
  int probes = 0;
};

// `wins(b)` runs the allocation with the agent's bid replaced by b. The
// search covers [0, B + 1] whatever the agent's actual bid, so every bid of
// the agent yields the same answer. Throws NonMonotoneDetected when a probe
// below `known_win` loses, and std::logic_error when the agent wins at
// B + 1.
Threshold FindThreshold(int agent, const std::function<bool(const Rational&)>& wins,
                        const Rational& budget, const Rational* known_win = nullptr,
                        const ThresholdOptions& options = {});

}  // namespace bfm

#endif  // BFM_PAYMENTS_H_
