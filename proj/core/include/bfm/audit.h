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

// Brute-force audits of mechanisms: exact expectations over the enumerated
// randomness, a truthfulness probe on a finite bid grid, individual
// rationality, budget feasibility and the measured approximation ratio.
// A grid audit can refute truthfulness but never prove it.

#ifndef BFM_AUDIT_H_
#define BFM_AUDIT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bfm/generators.h"
#include "bfm/instance.h"
#include "bfm/mechanisms.h"
#include "bfm/rational.h"

namespace bfm {

// Sum of probability * value over all branches. Throws std::logic_error if
// the probabilities do not sum to 1.
Rational ExactExpectation(const RandomizedOutcome& outcome);

struct AuditCheck {
  std::string property;  // monotone, truthful, individually-rational, ...
  bool pass = true;
  // Replayable counterexample for failures: leaf, agent, bids.
  std::string witness;
};

struct AuditReport {
  std::string instance_digest;
  std::string mechanism;
  int n = 0;
  Rational budget;
  Rational opt;
  Rational value;  // expectation over the audited leaves
  // opt / value; 1 when both are 0, empty ("inf") when only value is 0.
  std::optional<Rational> ratio;
  std::vector<AuditCheck> checks;

  bool all_passed() const;
  const AuditCheck* Find(std::string_view property) const;
};

struct AuditOptions {
  MechanismOptions mechanism;
  // Audit every leaf (exact) or one leaf drawn from `seed` (sampled).
  bool exact = true;
  std::uint64_t seed = 0;
  // Payments, truthfulness, monotonicity, IR and budget checks.
  bool incentives = true;
  // Compare the ratio against the catalog bound when there is one.
  bool check_ratio = true;
  ThresholdOptions threshold;
};

// Deviation bids for an agent of true cost `cost`: fixed multiples of the
// cost (of B/4 when the cost is 0).
std::vector<Rational> DeviationGrid(const Rational& cost,
                                    const Rational& budget);

// opt / value with the 0/0 = 1 rule; empty when value = 0 < opt.
std::optional<Rational> Ratio(const Rational& opt, const Rational& value);

AuditReport AuditMechanism(std::string_view mechanism_id, const Instance& inst,
                           const AuditOptions& options = {});

std::string CsvHeader(int decimals = 0);
std::string CsvRow(const AuditReport& report, int decimals = 0);

struct RatioSummary {
  int instances = 0;
  int failures = 0;  // reports with any failing check
  std::optional<Rational> worst;  // empty when some ratio is infinite
  bool infinite = false;
  std::string worst_digest;
};

// Audits `count` instances generated from `base` with seeds seed, seed + 1,
// ...; writes one CSV row per instance to `csv` when given. Instance k has
// base.n + k mod (n_max - base.n + 1) agents when n_max > base.n.
RatioSummary MeasureRatio(std::string_view mechanism_id,
                          const GeneratorSpec& base, int n_max, int count,
                          std::uint64_t seed, const AuditOptions& options,
                          std::ostream* csv = nullptr, int decimals = 0);

}  // namespace bfm

#endif  // BFM_AUDIT_H_
