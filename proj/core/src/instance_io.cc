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

#include "bfm/instance_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace bfm {
namespace {

using Json = nlohmann::ordered_json;

Rational ReadRational(const Json& value, const std::string& where) {
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw std::invalid_argument(where + ": expected a \"p/q\" string");
}

Rational ReadNonNegative(const Json& value, const std::string& where) {
  Rational r = ReadRational(value, where);
  if (sgn(r) < 0) throw std::invalid_argument(where + " is negative");
  return r;
}

std::vector<Rational> ReadList(const Json& doc, const char* key, int length) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw std::invalid_argument(std::string("missing list '") + key + "'");
  }
  const Json& list = doc[key];
  if (length >= 0 && static_cast<int>(list.size()) != length) {
    throw std::invalid_argument(std::string("'") + key + "' must have " +
                                std::to_string(length) + " entries");
  }
  std::vector<Rational> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    out.push_back(ReadNonNegative(list[k], std::string(key) + "[" +
                                               std::to_string(k) + "]"));
  }
  return out;
}

Json WriteList(const std::vector<Rational>& values) {
  Json list = Json::array();
  for (const Rational& v : values) list.push_back(ToString(v));
  return list;
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("expected a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw std::invalid_argument("missing 'kind'");
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw std::invalid_argument("missing integer 'n'");
  }
  const int n = doc["n"].get<int>();
  if (n < 1 || n > kMaxAgents) {
    throw std::invalid_argument("'n' must be between 1 and 62");
  }
  if (!doc.contains("budget")) throw std::invalid_argument("missing 'budget'");
  const Rational budget = ReadRational(doc["budget"], "budget");
  if (sgn(budget) <= 0) throw std::invalid_argument("budget must be positive");
  std::vector<Rational> costs = ReadList(doc, "costs", n);

  const std::string kind = doc["kind"].get<std::string>();
  std::shared_ptr<const Valuation> valuation;
  if (kind == "cut") {
    if (!doc.contains("weights") || !doc["weights"].is_array()) {
      throw std::invalid_argument("missing list 'weights'");
    }
    std::vector<WeightedEdge> edges;
    for (const Json& entry : doc["weights"]) {
      if (!entry.is_array() || entry.size() != 3 ||
          !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
        throw std::invalid_argument("weights entries are [i, j, \"p/q\"]");
      }
      const int i = entry[0].get<int>();
      const int j = entry[1].get<int>();
      if (i < 1 || i > n || j < 1 || j > n) {
        throw std::invalid_argument("weight endpoint out of range");
      }
      edges.push_back({i - 1, j - 1, ReadNonNegative(entry[2], "weight")});
    }
    valuation = std::make_shared<CutValuation>(n, edges);
  } else if (kind == "additive") {
    valuation = std::make_shared<AdditiveValuation>(ReadList(doc, "values", n));
  } else if (kind == "xos") {
    if (!doc.contains("clauses") || !doc["clauses"].is_array()) {
      throw std::invalid_argument("missing list 'clauses'");
    }
    std::vector<std::vector<Rational>> clauses;
    for (const Json& clause : doc["clauses"]) {
      Json wrapper = {{"clause", clause}};
      clauses.push_back(ReadList(wrapper, "clause", n));
    }
    valuation = std::make_shared<XosValuation>(n, std::move(clauses));
  } else if (kind == "tabular") {
    if (n > kMaxTabularAgents) {
      throw std::invalid_argument("tabular instances have at most 24 agents");
    }
    std::vector<Rational> table = ReadList(doc, "table", 1 << n);
    valuation = std::make_shared<TabularValuation>(n, std::move(table));
  } else {
    throw std::invalid_argument("unknown kind '" + kind + "'");
  }
  return Instance(std::move(costs), budget, std::move(valuation));
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

std::string SerializeInstance(const Instance& inst) {
  const Valuation& v = inst.valuation().Underlying();
  Json doc;
  doc["kind"] = std::string(KindName(v.kind()));
  doc["n"] = inst.n();
  doc["budget"] = ToString(inst.budget());
  doc["costs"] = WriteList(inst.costs());
  if (const CutValuation* cut = AsCut(v)) {
    Json weights = Json::array();
    for (const WeightedEdge& e : cut->Edges()) {
      weights.push_back(Json::array({e.i + 1, e.j + 1, ToString(e.weight)}));
    }
    doc["weights"] = std::move(weights);
  } else if (const AdditiveValuation* add = AsAdditive(v)) {
    doc["values"] = WriteList(add->values());
  } else if (const XosValuation* xos = AsXos(v)) {
    Json clauses = Json::array();
    for (const auto& clause : xos->clauses()) clauses.push_back(WriteList(clause));
    doc["clauses"] = std::move(clauses);
  } else {
    std::vector<Rational> table(std::size_t{1} << inst.n());
    for (std::size_t mask = 0; mask < table.size(); ++mask) {
      table[mask] = v.Value(AgentSet(mask));
    }
    doc["table"] = WriteList(table);
  }
  return doc.dump(2) + "\n";
}

void SaveInstance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << SerializeInstance(inst);
}

std::uint64_t Fnv1a(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string InstanceDigest(const Instance& inst) {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(Fnv1a(SerializeInstance(inst))));
  return buffer;
}

}  // namespace bfm
