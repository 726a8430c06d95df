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

// Subcommands of the bfm tool. Each returns the process exit code: 0 when
// every requested assertion holds, 1 when one fails.

#ifndef BFM_TOOLS_COMMANDS_H_
#define BFM_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>

#include "bfm/generators.h"

namespace bfm::cli {

struct CommonFlags {
  std::string out;  // empty: stdout
  std::optional<std::string> eps;
  std::optional<std::string> rho;
  std::optional<std::string> gamma;
  std::string mode = "sampled";
  std::uint64_t seed = 1;
  int decimals = 0;
};

int Generate(const GeneratorSpec& spec, const CommonFlags& flags);
int Run(const std::string& algorithm, const std::string& instance_path,
        const CommonFlags& flags);
int Sweep(const std::string& mechanism, const GeneratorSpec& spec, int n_max,
          int count, bool incentives, const CommonFlags& flags);
int Audit(const std::string& mechanism, const std::string& instance_path,
          const CommonFlags& flags);
int Lp(const std::string& instance_path, bool round, bool dump,
       const CommonFlags& flags);
int LocalSearch(const std::string& instance_path, bool verify,
                const CommonFlags& flags);

}  // namespace bfm::cli

#endif  // BFM_TOOLS_COMMANDS_H_
