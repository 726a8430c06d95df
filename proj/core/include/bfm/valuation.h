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

// Value oracles. All valuations are immutable after construction apart from
// the query counter, which is atomic.

#ifndef BFM_VALUATION_H_
#define BFM_VALUATION_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "bfm/agent_set.h"
#include "bfm/rational.h"

namespace bfm {

enum class ValuationKind { kCut, kAdditive, kXos, kTabular };

std::string_view KindName(ValuationKind kind);

inline constexpr int kMaxTabularAgents = 24;

class Valuation {
 public:
  explicit Valuation(int n);
  virtual ~Valuation() = default;
  Valuation(const Valuation&) = delete;
  Valuation& operator=(const Valuation&) = delete;

  virtual ValuationKind kind() const = 0;
  int n() const { return n_; }

  // v(S). Throws std::out_of_range if S names an agent outside [n].
  Rational Value(AgentSet s) const;

  std::uint64_t query_count() const {
    return queries_.load(std::memory_order_relaxed);
  }
  void ResetQueryCount() const { queries_.store(0, std::memory_order_relaxed); }

  // The valuation carrying the actual representation. Memoizing wrappers
  // forward to the wrapped oracle; everything else returns itself.
  virtual const Valuation& Underlying() const { return *this; }

 protected:
  virtual Rational Evaluate(AgentSet s) const = 0;

 private:
  const int n_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

struct WeightedEdge {
  int i;
  int j;
  Rational weight;
};

// v(S) = sum of w_ij over i in S, j outside S.
class CutValuation final : public Valuation {
 public:
  // Throws std::invalid_argument on negative weights, self loops, or
  // repeated edges with different weights.
  CutValuation(int n, const std::vector<WeightedEdge>& edges);

  ValuationKind kind() const override { return ValuationKind::kCut; }
  const Rational& weight(int i, int j) const {
    return weights_[static_cast<std::size_t>(i * n() + j)];
  }
  // Total weight incident to i, which is v({i}).
  const Rational& degree(int i) const {
    return degrees_[static_cast<std::size_t>(i)];
  }
  // Edges with positive weight, i < j.
  std::vector<WeightedEdge> Edges() const;
  bool IsUnweighted() const;

 protected:
  Rational Evaluate(AgentSet s) const override;

 private:
  std::vector<Rational> weights_;
  std::vector<Rational> degrees_;
};

class AdditiveValuation final : public Valuation {
 public:
  explicit AdditiveValuation(std::vector<Rational> values);
  ValuationKind kind() const override { return ValuationKind::kAdditive; }
  const std::vector<Rational>& values() const { return values_; }

 protected:
  Rational Evaluate(AgentSet s) const override;

 private:
  std::vector<Rational> values_;
};

// Pointwise maximum of non-negative additive clauses.
class XosValuation final : public Valuation {
 public:
  XosValuation(int n, std::vector<std::vector<Rational>> clauses);
  ValuationKind kind() const override { return ValuationKind::kXos; }
  const std::vector<std::vector<Rational>>& clauses() const {
    return clauses_;
  }
  Rational ClauseValue(std::size_t clause, AgentSet s) const;
  // Index of a clause attaining v(S); lowest index on ties.
  std::size_t BestClause(AgentSet s) const;

 protected:
  Rational Evaluate(AgentSet s) const override;

 private:
  std::vector<std::vector<Rational>> clauses_;
};

// Explicit value for every subset, indexed by bitmask.
class TabularValuation final : public Valuation {
 public:
  TabularValuation(int n, std::vector<Rational> table);
  ValuationKind kind() const override { return ValuationKind::kTabular; }
  const std::vector<Rational>& table() const { return table_; }

 protected:
  Rational Evaluate(AgentSet s) const override {
    return table_[static_cast<std::size_t>(s.bits())];
  }

 private:
  std::vector<Rational> table_;
};

// Precomputed table of another valuation; reports the wrapped kind.
class MemoValuation final : public Valuation {
 public:
  explicit MemoValuation(std::shared_ptr<const Valuation> inner);
  ValuationKind kind() const override { return inner_->kind(); }
  const Valuation& Underlying() const override { return inner_->Underlying(); }

 protected:
  Rational Evaluate(AgentSet s) const override {
    return table_[static_cast<std::size_t>(s.bits())];
  }

 private:
  std::shared_ptr<const Valuation> inner_;
  std::vector<Rational> table_;
};

inline constexpr int kMaxMemoAgents = 16;

// Wraps `v` in a MemoValuation when n <= kMaxMemoAgents, else returns `v`.
std::shared_ptr<const Valuation> Memoize(std::shared_ptr<const Valuation> v);

const CutValuation* AsCut(const Valuation& v);
const AdditiveValuation* AsAdditive(const Valuation& v);
const XosValuation* AsXos(const Valuation& v);

}  // namespace bfm

#endif  // BFM_VALUATION_H_
