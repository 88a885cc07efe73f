// Copyright 2026 The Blockscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLOCKSCOPE_PROFILE_HPP
#define BLOCKSCOPE_PROFILE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "blockscope/annotation.hpp"

namespace blockscope {

using Cycle = std::uint64_t;

/// Rule-level activity trace of a simulation run of `cycles` cycles.
struct ActivityProfile {
  Cycle cycles = 0;
  std::map<std::string, BlockLabel> rule_block;
  std::map<std::string, std::vector<Cycle>> firings;  // sorted, each < cycles
  std::set<std::pair<std::string, std::string>> writes;  // (rule, state)
  std::set<std::pair<BlockLabel, std::string>> reads;    // (block, state)

  friend bool operator==(const ActivityProfile&, const ActivityProfile&) = default;
};

}  // namespace blockscope

#endif  // BLOCKSCOPE_PROFILE_HPP
