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

#include "bfm/valuation.h"

#include <stdexcept>
#include <string>

namespace bfm {

std::string_view KindName(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::kCut:
      return "cut";
    case ValuationKind::kAdditive:
      return "additive";
    case ValuationKind::kXos:
      return "xos";
    case ValuationKind::kTabular:
      return "tabular";
  }
  return "unknown";
}

Valuation::Valuation(int n) : n_(n) {
  if (n < 1 || n > kMaxAgents) {
    throw std::invalid_argument("number of agents out of range: " +
                                std::to_string(n));
  }
}

Rational Valuation::Value(AgentSet s) const {
  if (!s.IsSubsetOf(AgentSet::Full(n_))) {
    throw std::out_of_range("unknown agent in " + s.ToString());
  }
  queries_.fetch_add(1, std::memory_order_relaxed);
  return Evaluate(s);
}

CutValuation::CutValuation(int n, const std::vector<WeightedEdge>& edges)
    : Valuation(n),
      weights_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)),
      degrees_(static_cast<std::size_t>(n)) {
  std::vector<bool> seen(weights_.size(), false);
  for (const WeightedEdge& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (sgn(e.weight) < 0) throw std::invalid_argument("negative edge weight");
    if (e.i == e.j) {
      if (sgn(e.weight) != 0) throw std::invalid_argument("self loop");
      continue;
    }
    const auto ij = static_cast<std::size_t>(e.i * n + e.j);
    const auto ji = static_cast<std::size_t>(e.j * n + e.i);
    if (seen[ij] && weights_[ij] != e.weight) {
      throw std::invalid_argument("asymmetric or conflicting weight for edge " +
                                  std::to_string(e.i + 1) + "-" +
                                  std::to_string(e.j + 1));
    }
    seen[ij] = seen[ji] = true;
    weights_[ij] = e.weight;
    weights_[ji] = e.weight;
  }
  for (int i = 0; i < n; ++i) {
    Rational d = 0;
    for (int j = 0; j < n; ++j) d += weight(i, j);
    degrees_[static_cast<std::size_t>(i)] = d;
  }
}

std::vector<WeightedEdge> CutValuation::Edges() const {
  std::vector<WeightedEdge> out;
  for (int i = 0; i < n(); ++i) {
    for (int j = i + 1; j < n(); ++j) {
      if (sgn(weight(i, j)) > 0) out.push_back({i, j, weight(i, j)});
    }
  }
  return out;
}

bool CutValuation::IsUnweighted() const {
  for (const Rational& w : weights_) {
    if (sgn(w) != 0 && w != 1) return false;
  }
  return true;
}

Rational CutValuation::Evaluate(AgentSet s) const {
  Rational total = 0;
  const AgentSet rest = AgentSet::Full(n()) - s;
  for (int i : s) {
    for (int j : rest) total += weight(i, j);
  }
  return total;
}

AdditiveValuation::AdditiveValuation(std::vector<Rational> values)
    : Valuation(static_cast<int>(values.size())), values_(std::move(values)) {
  for (const Rational& v : values_) {
    if (sgn(v) < 0) throw std::invalid_argument("negative additive value");
  }
}

Rational AdditiveValuation::Evaluate(AgentSet s) const {
  Rational total = 0;
  for (int i : s) total += values_[static_cast<std::size_t>(i)];
  return total;
}

XosValuation::XosValuation(int n, std::vector<std::vector<Rational>> clauses)
    : Valuation(n), clauses_(std::move(clauses)) {
  if (clauses_.empty()) throw std::invalid_argument("xos without clauses");
  for (const auto& clause : clauses_) {
    if (static_cast<int>(clause.size()) != n) {
      throw std::invalid_argument("xos clause length differs from n");
    }
    for (const Rational& w : clause) {
      if (sgn(w) < 0) throw std::invalid_argument("negative clause weight");
    }
  }
}

Rational XosValuation::ClauseValue(std::size_t clause, AgentSet s) const {
  Rational total = 0;
  for (int i : s) total += clauses_[clause][static_cast<std::size_t>(i)];
  return total;
}

std::size_t XosValuation::BestClause(AgentSet s) const {
  std::size_t best = 0;
  Rational best_value = ClauseValue(0, s);
  for (std::size_t k = 1; k < clauses_.size(); ++k) {
    Rational value = ClauseValue(k, s);
    if (value > best_value) {
      best_value = value;
      best = k;
    }
  }
  return best;
}

Rational XosValuation::Evaluate(AgentSet s) const {
  return ClauseValue(BestClause(s), s);
}

TabularValuation::TabularValuation(int n, std::vector<Rational> table)
    : Valuation(n), table_(std::move(table)) {
  if (n > kMaxTabularAgents) {
    throw std::invalid_argument("tabular valuation limited to 24 agents");
  }
  if (table_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("tabular valuation needs 2^n entries");
  }
  if (sgn(table_[0]) != 0) throw std::invalid_argument("v(empty set) != 0");
}

MemoValuation::MemoValuation(std::shared_ptr<const Valuation> inner)
    : Valuation(inner->n()), inner_(std::move(inner)) {
  const int n = this->n();
  if (n > kMaxTabularAgents) {
    throw std::invalid_argument("memo table limited to 24 agents");
  }
  const std::size_t size = std::size_t{1} << n;
  table_.resize(size);
  if (const CutValuation* cut = AsCut(*inner_)) {
    // v(S + i) = v(S) + deg(i) - 2 w(i, S), filled along the lowest bit.
    for (std::size_t mask = 1; mask < size; ++mask) {
      const int i = std::countr_zero(mask);
      const std::size_t prev = mask & (mask - 1);
      Rational value = table_[prev] + cut->degree(i);
      for (int j : AgentSet(prev)) value -= 2 * cut->weight(i, j);
      table_[mask] = value;
    }
  } else {
    for (std::size_t mask = 0; mask < size; ++mask) {
      table_[mask] = inner_->Value(AgentSet(mask));
    }
  }
}

std::shared_ptr<const Valuation> Memoize(std::shared_ptr<const Valuation> v) {
  if (v->n() > kMaxMemoAgents) return v;
  if (dynamic_cast<const MemoValuation*>(v.get()) != nullptr) return v;
  if (dynamic_cast<const TabularValuation*>(v.get()) != nullptr) return v;
  return std::make_shared<MemoValuation>(std::move(v));
}

const CutValuation* AsCut(const Valuation& v) {
  return dynamic_cast<const CutValuation*>(&v.Underlying());
}

const AdditiveValuation* AsAdditive(const Valuation& v) {
  return dynamic_cast<const AdditiveValuation*>(&v.Underlying());
}

const XosValuation* AsXos(const Valuation& v) {
  return dynamic_cast<const XosValuation*>(&v.Underlying());
}

}  // namespace bfm
