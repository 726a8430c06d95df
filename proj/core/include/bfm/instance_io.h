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

// Instance files: a JSON document with the fields
//   kind     "cut" | "additive" | "xos" | "tabular"
//   n        number of agents
//   budget   "p/q"
//   costs    ["p/q", ...]
//   weights  [[i, j, "p/q"], ...]      (cut, 1-based endpoints)
//   values   ["p/q", ...]              (additive)
//   clauses  [["p/q", ...], ...]       (xos)
//   table    ["p/q", ...]              (tabular, indexed by bitmask)

#ifndef BFM_INSTANCE_IO_H_
#define BFM_INSTANCE_IO_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "bfm/instance.h"

namespace bfm {

// Throws std::invalid_argument with a description of the first problem.
Instance ParseInstance(std::string_view text);
Instance LoadInstance(const std::string& path);

// Deterministic rendering; equal instances give identical bytes.
std::string SerializeInstance(const Instance& inst);
void SaveInstance(const Instance& inst, const std::string& path);

// FNV-1a of the serialized instance, as 16 hex digits.
std::string InstanceDigest(const Instance& inst);
std::uint64_t Fnv1a(std::string_view bytes);

}  // namespace bfm

#endif  // BFM_INSTANCE_IO_H_
