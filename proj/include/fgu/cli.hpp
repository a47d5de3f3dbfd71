// Copyright 2026 The fgu Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fgu::cli {

/// Everything one invocation needs. String-valued lists keep their
/// command-line spelling ("0,1,2", "start:stop:count") until dispatch.
struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string output;

  std::string family;
  std::size_t dim = 0;
  std::optional<double> s;
  std::optional<double> eta;

  std::string selection;
  std::string sets;
  std::string weights;
  bool all = false;
  std::string normalization = "auto";

  std::string scenario;
  std::string eta_grid;
  std::string s_grid;
  std::optional<std::size_t> n;
  std::string base_order;

  std::string suite = "all";
  std::uint64_t seed = 1;
  std::uint64_t samples = 10000;
  std::string format = "json";
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitConfigError = 2;

/// Seed used when --seed is absent: $FGU_SEED if set, else 1.
std::uint64_t default_seed();

int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fgu::cli
