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

#include "bfm/payments.h"

#include <algorithm>
#include <vector>

#include "bfm/breakpoints.h"

namespace bfm {

Threshold FindThreshold(int agent,
                        const std::function<bool(const Rational&)>& wins,
                        const Rational& budget, const Rational* known_win,
                        const ThresholdOptions& options) {
  Threshold out;
  auto probe = [&](const Rational& bid) {
    ++out.probes;
    const bool won = wins(bid);
    if (!won && known_win != nullptr && bid <= *known_win) {
      throw NonMonotoneDetected("agent " + std::to_string(agent + 1) +
                                " loses at bid " + ToString(bid) +
                                " but wins at " + ToString(*known_win));
    }
    return won;
  };

  Rational lo = 0;
  Rational hi = budget + 1;
  if (!probe(lo)) {
    out.value = 0;
    return out;
  }
  out.ever_wins = true;
  if (probe(hi)) {
    throw std::logic_error("agent " + std::to_string(agent + 1) +
                           " wins with a bid above the budget");
  }
  for (int step = 0; step < options.bits; ++step) {
    Rational mid = (lo + hi) / 2;
    if (probe(mid)) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }

  std::vector<Rational> candidates;
  {
    BreakpointLog log(agent);
    probe(lo);
    probe(hi);
    for (const Rational& point : log.points()) {
      if (point >= lo && point <= hi) candidates.push_back(point);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  if (budget >= lo && budget <= hi) candidates.push_back(budget);
  candidates.push_back(SimplestBetween(lo, hi));

  const Rational nudge = (hi - lo) * InversePowerOfTwo(20);
  for (const Rational& q : candidates) {
    const Rational below = q - nudge;
    const Rational above = q + nudge;
    if (below < lo || above > hi) continue;
    if (probe(below) && !probe(above)) {
      out.value = q;
      out.exact = true;
      return out;
    }
  }
  out.value = lo;
  return out;
}

}  // namespace bfm
