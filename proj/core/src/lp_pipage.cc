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

#include "bfm/lp_pipage.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bfm/brute_force.h"
#include "bfm/valuation.h"

namespace bfm {
namespace {

std::size_t PairIndex(int n, int i, int j) {
  // Row-major position of (i, j), i < j, among all pairs.
  return static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
}

bool IsFractional(const Rational& v) { return sgn(v) > 0 && v < 1; }

// Bounded-variable primal simplex on a dense tableau. Structural variables
// live in [0, 1], slacks in [0, inf).
class BoundedSimplex {
 public:
  BoundedSimplex(int rows, int structural)
      : rows_(rows),
        structural_(structural),
        cols_(structural + rows),
        tableau_(static_cast<std::size_t>(rows),
                 std::vector<Rational>(static_cast<std::size_t>(cols_))),
        rhs_(static_cast<std::size_t>(rows)),
        reduced_(static_cast<std::size_t>(cols_)),
        at_upper_(static_cast<std::size_t>(cols_), false),
        basic_row_(static_cast<std::size_t>(cols_), -1),
        basis_(static_cast<std::size_t>(rows)) {
    for (int r = 0; r < rows_; ++r) {
      At(r, structural_ + r) = 1;
      basis_[static_cast<std::size_t>(r)] = structural_ + r;
      basic_row_[static_cast<std::size_t>(structural_ + r)] = r;
    }
  }

  Rational& At(int r, int c) {
    return tableau_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  void SetRhs(int r, const Rational& value) {
    rhs_[static_cast<std::size_t>(r)] = value;
  }
  void SetObjective(int c, const Rational& value) {
    reduced_[static_cast<std::size_t>(c)] = value;
  }

  // Returns the number of pivots (bound flips included).
  int Solve(int pivot_cap) {
    int steps = 0;
    bool bland = false;
    while (true) {
      const int entering = ChooseEntering(bland);
      if (entering < 0) return steps;
      if (++steps > pivot_cap) {
        throw PivotCapExceeded("simplex pivot cap exceeded");
      }
      const bool degenerate = Step(entering);
      if (degenerate) bland = true;
    }
  }

  Rational Value(int c) const {
    const int r = basic_row_[static_cast<std::size_t>(c)];
    if (r >= 0) return rhs_[static_cast<std::size_t>(r)];
    return at_upper_[static_cast<std::size_t>(c)] ? Rational(1) : Rational(0);
  }
  const std::vector<int>& basis() const { return basis_; }

 private:
  bool HasUpper(int c) const { return c < structural_; }

  int ChooseEntering(bool bland) const {
    int best = -1;
    Rational best_gain;
    for (int c = 0; c < cols_; ++c) {
      if (basic_row_[static_cast<std::size_t>(c)] >= 0) continue;
      const Rational& d = reduced_[static_cast<std::size_t>(c)];
      const int s = sgn(d);
      const bool up = at_upper_[static_cast<std::size_t>(c)];
      if (!((s > 0 && !up) || (s < 0 && up))) continue;
      if (bland) return c;
      const Rational gain = s > 0 ? d : Rational(-d);
      if (best < 0 || gain > best_gain) {
        best = c;
        best_gain = gain;
      }
    }
    return best;
  }

  // Moves the entering variable as far as the bounds allow. Returns whether
  // the step had length zero.
  bool Step(int q) {
    const bool increasing = !at_upper_[static_cast<std::size_t>(q)];
    bool limited = HasUpper(q);
    Rational step = 1;  // bound flip distance
    int leave_row = -1;
    Rational ratio;
    for (int r = 0; r < rows_; ++r) {
      const Rational& a = tableau_[static_cast<std::size_t>(r)]
                                  [static_cast<std::size_t>(q)];
      const int s = sgn(a) * (increasing ? 1 : -1);
      if (s == 0) continue;
      const int var = basis_[static_cast<std::size_t>(r)];
      const Rational& beta = rhs_[static_cast<std::size_t>(r)];
      if (s > 0) {
        ratio = beta / abs(a);
      } else {
        if (!HasUpper(var)) continue;
        ratio = (1 - beta) / abs(a);
      }
      const bool better =
          !limited || ratio < step ||
          (ratio == step && leave_row >= 0 &&
           var < basis_[static_cast<std::size_t>(leave_row)]);
      if (better) {
        step = ratio;
        leave_row = r;
        limited = true;
      }
    }
    if (!limited) throw std::logic_error("cut LP reported unbounded");

    const int dir = increasing ? 1 : -1;
    for (int r = 0; r < rows_; ++r) {
      const Rational& a = tableau_[static_cast<std::size_t>(r)]
                                  [static_cast<std::size_t>(q)];
      if (sgn(a) == 0) continue;
      if (dir > 0) {
        rhs_[static_cast<std::size_t>(r)] -= a * step;
      } else {
        rhs_[static_cast<std::size_t>(r)] += a * step;
      }
    }
    if (leave_row < 0) {
      at_upper_[static_cast<std::size_t>(q)] = increasing;
      return sgn(step) == 0;
    }

    const int leaving = basis_[static_cast<std::size_t>(leave_row)];
    const Rational& pivot_entry = tableau_[static_cast<std::size_t>(leave_row)]
                                          [static_cast<std::size_t>(q)];
    // Leaving variable drops to 0 when it was decreasing.
    at_upper_[static_cast<std::size_t>(leaving)] =
        sgn(pivot_entry) * dir < 0;
    Rational entering_value = increasing ? step : Rational(1 - step);
    rhs_[static_cast<std::size_t>(leave_row)] = entering_value;
    at_upper_[static_cast<std::size_t>(q)] = false;
    basic_row_[static_cast<std::size_t>(leaving)] = -1;
    basic_row_[static_cast<std::size_t>(q)] = leave_row;
    basis_[static_cast<std::size_t>(leave_row)] = q;
    Pivot(leave_row, q);
    return sgn(step) == 0;
  }

  void Pivot(int p, int q) {
    std::vector<Rational>& prow = tableau_[static_cast<std::size_t>(p)];
    const Rational inverse = 1 / prow[static_cast<std::size_t>(q)];
    std::vector<int> nonzero;
    for (int c = 0; c < cols_; ++c) {
      Rational& entry = prow[static_cast<std::size_t>(c)];
      if (sgn(entry) != 0) {
        entry *= inverse;
        nonzero.push_back(c);
      }
    }
    Rational factor;
    auto eliminate = [&](std::vector<Rational>& row) {
      factor = row[static_cast<std::size_t>(q)];
      if (sgn(factor) == 0) return;
      for (int c : nonzero) {
        row[static_cast<std::size_t>(c)] -=
            factor * prow[static_cast<std::size_t>(c)];
      }
    };
    for (int r = 0; r < rows_; ++r) {
      if (r != p) eliminate(tableau_[static_cast<std::size_t>(r)]);
    }
    eliminate(reduced_);
  }

  int rows_;
  int structural_;
  int cols_;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> rhs_;
  std::vector<Rational> reduced_;
  std::vector<bool> at_upper_;
  std::vector<int> basic_row_;
  std::vector<int> basis_;
};

std::string Name(const char* prefix, int i) {
  return prefix + std::to_string(i + 1);
}
std::string PairName(int i, int j) {
  return "z" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

CutLpModel MakeCutLpModel(const Instance& inst, AgentSet ground) {
  const CutValuation* cut = AsCut(inst.valuation().Underlying());
  if (cut == nullptr) {
    throw std::invalid_argument("the cut LP needs a cut valuation");
  }
  if (!ground.IsSubsetOf(inst.agents())) {
    throw std::out_of_range("ground set names unknown agents");
  }
  CutLpModel model;
  model.n = inst.n();
  model.weights.resize(static_cast<std::size_t>(model.n * model.n));
  for (int i = 0; i < model.n; ++i) {
    for (int j = 0; j < model.n; ++j) {
      model.weights[static_cast<std::size_t>(i * model.n + j)] =
          cut->weight(i, j);
    }
  }
  model.costs = inst.costs();
  model.budget = inst.budget();
  model.fixed_zero = inst.agents() - ground;
  return model;
}

LpSolution SolveLp(const CutLpModel& model, int pivot_cap) {
  const int n = model.n;
  std::vector<int> free_vertices;
  std::vector<int> column_of(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (!model.fixed_zero.contains(i)) {
      column_of[static_cast<std::size_t>(i)] =
          static_cast<int>(free_vertices.size());
      free_vertices.push_back(i);
    }
  }
  struct Edge {
    int i;
    int j;
  };
  // Pairs with zero weight or two fixed endpoints never matter and are left
  // out; with one fixed endpoint the second inequality is implied by the
  // bounds.
  std::vector<Edge> edges;
  int rows = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (sgn(model.weight(i, j)) == 0) continue;
      const bool fi = model.fixed_zero.contains(i);
      const bool fj = model.fixed_zero.contains(j);
      if (fi && fj) continue;
      edges.push_back({i, j});
      rows += (fi || fj) ? 1 : 2;
    }
  }
  const int k = static_cast<int>(free_vertices.size());
  const int structural = k + static_cast<int>(edges.size());
  BoundedSimplex simplex(rows, structural);

  int r = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int zc = k + static_cast<int>(e);
    const int ci = column_of[static_cast<std::size_t>(edges[e].i)];
    const int cj = column_of[static_cast<std::size_t>(edges[e].j)];
    simplex.SetObjective(zc, model.weight(edges[e].i, edges[e].j));
    // z - x_i - x_j <= 0
    simplex.At(r, zc) = 1;
    if (ci >= 0) simplex.At(r, ci) = -1;
    if (cj >= 0) simplex.At(r, cj) = -1;
    ++r;
    if (ci >= 0 && cj >= 0) {
      // z + x_i + x_j <= 2
      simplex.At(r, zc) = 1;
      simplex.At(r, ci) = 1;
      simplex.At(r, cj) = 1;
      simplex.SetRhs(r, 2);
      ++r;
    }
  }
  for (int f = 0; f < k; ++f) {
    simplex.At(r, f) = model.costs[static_cast<std::size_t>(
        free_vertices[static_cast<std::size_t>(f)])];
  }
  simplex.SetRhs(r, model.budget);

  LpSolution out;
  out.pivots = simplex.Solve(pivot_cap);
  out.x.assign(static_cast<std::size_t>(n), Rational(0));
  for (int f = 0; f < k; ++f) {
    out.x[static_cast<std::size_t>(free_vertices[static_cast<std::size_t>(f)])] =
        simplex.Value(f);
  }
  out.z.assign(static_cast<std::size_t>(n * (n - 1) / 2), Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Rational s = out.x[static_cast<std::size_t>(i)] +
                         out.x[static_cast<std::size_t>(j)];
      Rational z = std::min(s, Rational(2 - s));
      if (z > 1) z = 1;
      out.z[PairIndex(n, i, j)] = z;
    }
  }
  out.objective = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Rational z = simplex.Value(k + static_cast<int>(e));
    out.z[PairIndex(n, edges[e].i, edges[e].j)] = z;
    out.objective += model.weight(edges[e].i, edges[e].j) * z;
  }
  for (int var : simplex.basis()) {
    if (var < k) {
      out.basis.push_back(Name("x", free_vertices[static_cast<std::size_t>(var)]));
    } else if (var < structural) {
      const Edge& e = edges[static_cast<std::size_t>(var - k)];
      out.basis.push_back(PairName(e.i, e.j));
    } else {
      out.basis.push_back("s" + std::to_string(var - structural + 1));
    }
  }
  return out;
}

Rational OptF(const Instance& inst, AgentSet ground) {
  if (ground.empty()) return 0;
  return SolveLp(MakeCutLpModel(inst, ground)).objective;
}

Rational OptFCache::Value(const Instance& inst, AgentSet ground) {
  const Valuation* oracle = inst.valuation_ptr().get();
  pins_.emplace(oracle, inst.valuation_ptr());
  std::string key = std::to_string(reinterpret_cast<std::uintptr_t>(oracle));
  key += '/';
  key += std::to_string(ground.bits());
  for (int i : ground) {
    key += ':';
    key += inst.cost(i).get_str();
  }
  key += '|';
  key += inst.budget().get_str();
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Rational value = OptF(inst, ground);
  cache_.emplace(std::move(key), value);
  return value;
}

std::string DumpLp(const CutLpModel& model) {
  std::ostringstream out;
  const int n = model.n;
  out << "maximize";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (sgn(model.weight(i, j)) == 0) continue;
      out << (first ? " " : " + ") << ToString(model.weight(i, j)) << " "
          << PairName(i, j);
      first = false;
    }
  }
  if (first) out << " 0";
  out << "\nsubject to\n";
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (sgn(model.weight(i, j)) == 0) continue;
      const std::string z = PairName(i, j);
      const std::string xi = Name("x", i);
      const std::string xj = Name("x", j);
      out << "  " << z << " - " << xi << " - " << xj << " <= 0\n";
      out << "  " << z << " + " << xi << " + " << xj << " <= 2\n";
    }
  }
  out << " ";
  for (int i = 0; i < n; ++i) {
    out << (i == 0 ? " " : " + ") << ToString(model.costs[static_cast<std::size_t>(i)])
        << " " << Name("x", i);
  }
  out << " <= " << ToString(model.budget) << "\n";
  for (int i : model.fixed_zero) out << "  " << Name("x", i) << " = 0\n";
  out << "bounds\n  0 <= x, z <= 1\n";
  return out.str();
}

Rational LinearObjective(const CutLpModel& model,
                         const std::vector<Rational>& x) {
  Rational total = 0;
  for (int i = 0; i < model.n; ++i) {
    for (int j = i + 1; j < model.n; ++j) {
      if (sgn(model.weight(i, j)) == 0) continue;
      const Rational s =
          x[static_cast<std::size_t>(i)] + x[static_cast<std::size_t>(j)];
      total += model.weight(i, j) * std::min(s, Rational(2 - s));
    }
  }
  return total;
}

Rational QuadraticObjective(const CutLpModel& model,
                            const std::vector<Rational>& x) {
  Rational total = 0;
  for (int i = 0; i < model.n; ++i) {
    const Rational& xi = x[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < model.n; ++j) {
      if (sgn(model.weight(i, j)) == 0) continue;
      const Rational& xj = x[static_cast<std::size_t>(j)];
      total += model.weight(i, j) * (xi + xj - 2 * xi * xj);
    }
  }
  return total;
}

PipageResult PipageRound(const CutLpModel& model, std::vector<Rational> x) {
  if (static_cast<int>(x.size()) != model.n) {
    throw std::invalid_argument("point has the wrong dimension");
  }
  PipageResult out;
  auto cost = [&](int i) -> const Rational& {
    return model.costs[static_cast<std::size_t>(i)];
  };
  Rational value = QuadraticObjective(model, x);

  for (int i = 0; i < model.n; ++i) {
    if (!IsFractional(x[static_cast<std::size_t>(i)]) || sgn(cost(i)) != 0) {
      continue;
    }
    const Rational old = x[static_cast<std::size_t>(i)];
    x[static_cast<std::size_t>(i)] = 1;
    Rational up = QuadraticObjective(model, x);
    if (up < value) {
      x[static_cast<std::size_t>(i)] = 0;
      up = QuadraticObjective(model, x);
    }
    value = up;
    out.trace.push_back({i, -1, x[static_cast<std::size_t>(i)] - old, value});
  }

  while (true) {
    int a = -1;
    int b = -1;
    for (int i = 0; i < model.n && b < 0; ++i) {
      if (!IsFractional(x[static_cast<std::size_t>(i)])) continue;
      (a < 0 ? a : b) = i;
    }
    if (b < 0) {
      out.fractional = a;
      break;
    }
    Rational& xa = x[static_cast<std::size_t>(a)];
    Rational& xb = x[static_cast<std::size_t>(b)];
    const Rational trade = cost(a) / cost(b);  // x_b moves by -trade per unit
    const Rational lo = std::max(Rational(-xa), Rational((xb - 1) / trade));
    const Rational hi = std::min(Rational(1 - xa), Rational(xb / trade));
    const Rational base_a = xa;
    const Rational base_b = xb;
    xa = base_a + lo;
    xb = base_b - lo * trade;
    const Rational at_lo = QuadraticObjective(model, x);
    xa = base_a + hi;
    xb = base_b - hi * trade;
    const Rational at_hi = QuadraticObjective(model, x);
    Rational shift = hi;
    value = at_hi;
    if (at_lo > at_hi) {
      shift = lo;
      value = at_lo;
      xa = base_a + lo;
      xb = base_b - lo * trade;
    }
    out.trace.push_back({a, b, shift, value});
  }
  out.x = std::move(x);
  out.value = value;
  return out;
}

PipageBoundReport VerifyPipageBound(const Instance& inst) {
  PipageBoundReport report;
  const AgentSet affordable = inst.Affordable();
  const CutLpModel model = MakeCutLpModel(inst, affordable);
  const LpSolution lp = SolveLp(model);
  report.opt_f = lp.objective;
  report.opt = BruteOpt(inst).value;
  report.beta = 0;
  if (sgn(report.opt) > 0) {
    for (int i : affordable) {
      const Rational share = inst.Value(AgentSet::Single(i)) / report.opt;
      if (share > report.beta) report.beta = share;
    }
    report.ratio = report.opt_f / report.opt;
  } else {
    report.ratio = sgn(report.opt_f) == 0 ? Rational(1) : Rational(0);
  }
  report.relaxation_holds = report.opt <= report.opt_f;
  report.beta_bound_holds = report.opt_f <= (2 + 2 * report.beta) * report.opt;
  report.four_bound_holds = report.opt_f <= 4 * report.opt;

  const PipageResult rounded = PipageRound(model, lp.x);
  Rational previous = QuadraticObjective(model, lp.x);
  report.rounding_monotone = true;
  for (const PipageStep& step : rounded.trace) {
    if (step.value_after < previous) report.rounding_monotone = false;
    previous = step.value_after;
  }
  int fractional = 0;
  for (const Rational& v : rounded.x) fractional += IsFractional(v) ? 1 : 0;
  report.at_most_one_fractional = fractional <= 1;
  report.last_coordinate_bound = true;
  if (rounded.fractional >= 0) {
    std::vector<Rational> floor = rounded.x;
    floor[static_cast<std::size_t>(rounded.fractional)] = 0;
    report.last_coordinate_bound =
        rounded.value <= QuadraticObjective(model, floor) +
                             inst.Value(AgentSet::Single(rounded.fractional));
  }
  return report;
}

std::vector<Rational> RandomFractionalPoint(const CutLpModel& model,
                                            std::mt19937_64& rng) {
  std::vector<Rational> x(static_cast<std::size_t>(model.n), Rational(0));
  Rational spent = 0;
  for (int i = 0; i < model.n; ++i) {
    if (model.fixed_zero.contains(i)) continue;
    const long q = 1 + static_cast<long>(rng() % 12);
    const long p = static_cast<long>(rng() % static_cast<std::uint64_t>(q + 1));
    x[static_cast<std::size_t>(i)] = Rational(p, q);
    x[static_cast<std::size_t>(i)].canonicalize();
    spent += model.costs[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
  }
  if (spent > model.budget) {
    const Rational scale = model.budget / spent;
    for (Rational& v : x) v *= scale;
  }
  return x;
}

}  // namespace bfm
