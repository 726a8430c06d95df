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

// Small fixtures shared by the tests.

#ifndef BFM_TESTS_FIXTURES_H_
#define BFM_TESTS_FIXTURES_H_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bfm/agent_set.h"
#include "bfm/instance.h"
#include "bfm/rational.h"
#include "bfm/valuation.h"

namespace bfm::testing {

inline Rational Q(const std::string& text) { return ParseRational(text); }

inline std::vector<Rational> Qs(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const std::string& t : texts) out.push_back(Q(t));
  return out;
}

// 1-based agent list.
inline AgentSet Set(const std::vector<int>& one_based) {
  AgentSet s;
  for (int i : one_based) s = s.with(i - 1);
  return s;
}

// Edges given with 1-based endpoints.
inline Instance Cut(int n, const std::vector<std::pair<int, int>>& edges,
                    const std::vector<std::string>& weights,
                    const std::vector<std::string>& costs,
                    const std::string& budget) {
  std::vector<WeightedEdge> list;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    list.push_back({edges[k].first - 1, edges[k].second - 1,
                    weights.empty() ? Rational(1) : Q(weights[k])});
  }
  return Instance(Qs(costs), Q(budget),
                  std::make_shared<CutValuation>(n, list));
}

inline Instance K3(const std::string& budget = "1") {
  return Cut(3, {{1, 2}, {1, 3}, {2, 3}}, {}, {"1", "1", "1"}, budget);
}

inline Instance Path3() {
  return Cut(3, {{1, 2}, {2, 3}}, {}, {"1", "1", "1"}, "3");
}

inline Instance Additive(const std::vector<std::string>& values,
                         const std::vector<std::string>& costs,
                         const std::string& budget) {
  return Instance(Qs(costs), Q(budget),
                  std::make_shared<AdditiveValuation>(Qs(values)));
}

inline Instance Tabular(int n, const std::vector<std::string>& table,
                        const std::vector<std::string>& costs,
                        const std::string& budget) {
  return Instance(Qs(costs), Q(budget),
                  std::make_shared<TabularValuation>(n, Qs(table)));
}

inline Instance Xos(int n, const std::vector<std::vector<std::string>>& clauses,
                    const std::vector<std::string>& costs,
                    const std::string& budget) {
  std::vector<std::vector<Rational>> table;
  for (const auto& clause : clauses) table.push_back(Qs(clause));
  return Instance(Qs(costs), Q(budget),
                  std::make_shared<XosValuation>(n, std::move(table)));
}

}  // namespace bfm::testing

#endif  // BFM_TESTS_FIXTURES_H_
