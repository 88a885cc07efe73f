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

// Brute-force reference implementations. They share no code with the
// analyses they check: paths are enumerated exhaustively from the raw
// Netlist and activity is replayed one cycle at a time.

#ifndef BLOCKSCOPE_ORACLES_HPP
#define BLOCKSCOPE_ORACLES_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "blockscope/delay.hpp"
#include "blockscope/netlist.hpp"
#include "blockscope/profile.hpp"

namespace blockscope {

inline constexpr std::size_t kOracleMaxCells = 14;

/// Every source-to-sink path of the netlist, as cell-id sequences.
inline std::vector<std::vector<std::string>> oracle_enumerate_paths(const Netlist& netlist) {
  std::map<std::string, CellKind> kind;
  std::map<std::string, std::vector<std::string>> succ;
  for (const Cell& c : netlist.cells) kind[c.id] = c.kind;
  for (const Net& n : netlist.nets) succ[n.src].push_back(n.dst);

  std::vector<std::vector<std::string>> paths;
  std::vector<std::string> current;
  auto walk = [&](auto&& self, const std::string& id) -> void {
    current.push_back(id);
    if (is_sink(kind[id])) {
      paths.push_back(current);
    } else {
      for (const std::string& next : succ[id]) self(self, next);
    }
    current.pop_back();
  };
  for (const auto& [id, k] : kind) {
    if (is_source(k)) walk(walk, id);
  }
  return paths;
}

/// Exhaustive longest path through any of `block_cells` under `mode`,
/// with the lexicographically smallest path winning ties.
inline PathResult oracle_longest_path(const Netlist& netlist, const std::set<std::string>& block_cells,
                                      WeightingMode mode, bool block_nets = true,
                                      std::size_t max_cells = kOracleMaxCells) {
  if (netlist.cells.size() > max_cells) {
    throw Error("oracle-size-cap", "oracle limited to " + std::to_string(max_cells) + " cells");
  }
  std::map<std::string, Picoseconds> logic;
  std::map<std::pair<std::string, std::string>, Picoseconds> wire;
  for (const Cell& c : netlist.cells) logic[c.id] = c.logic_delay;
  for (const Net& n : netlist.nets) wire[{n.src, n.dst}] = n.net_delay;

  PathResult best;
  bool found = false;
  for (const std::vector<std::string>& path : oracle_enumerate_paths(netlist)) {
    bool crosses = false;
    for (const std::string& id : path) crosses = crosses || block_cells.count(id) != 0;
    if (!crosses) continue;

    PathResult r;
    r.path = path;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const bool mine = block_cells.count(path[i]) != 0;
      if (mode == WeightingMode::SystemDelay || mine) r.logic_delay += logic[path[i]];
      if (i + 1 < path.size()) {
        const bool next_mine = block_cells.count(path[i + 1]) != 0;
        if (mode == WeightingMode::SystemDelay || (block_nets && mine && next_mine)) {
          r.network_delay += wire[{path[i], path[i + 1]}];
        }
      }
    }
    r.total_delay = r.logic_delay + r.network_delay;
    if (!found || r.total_delay > best.total_delay ||
        (r.total_delay == best.total_delay && r.path < best.path)) {
      best = r;
      found = true;
    }
  }
  return best;
}

/// Literal replay of block activity: for each cycle t and each block, the
/// block is active if one of its rules fires at t, or a rule that fired at
/// t-1 wrote a state the block reads.
inline std::map<BlockLabel, std::set<Cycle>> oracle_replay(const ActivityProfile& profile) {
  const auto fires_at = [&](const std::string& rule, Cycle t) {
    const auto it = profile.firings.find(rule);
    if (it == profile.firings.end()) return false;
    for (Cycle c : it->second) {
      if (c == t) return true;
    }
    return false;
  };

  std::set<BlockLabel> blocks;
  for (const auto& [rule, label] : profile.rule_block) blocks.insert(label);
  for (const auto& [label, state] : profile.reads) blocks.insert(label);

  std::map<BlockLabel, std::set<Cycle>> active;
  for (const BlockLabel& b : blocks) active[b];
  for (Cycle t = 0; t < profile.cycles; ++t) {
    for (const BlockLabel& b : blocks) {
      bool on = false;
      for (const auto& [rule, label] : profile.rule_block) {
        if (label == b && fires_at(rule, t)) on = true;
      }
      if (t > 0) {
        for (const auto& [writer, state] : profile.writes) {
          if (fires_at(writer, t - 1) && profile.reads.count({b, state})) on = true;
        }
      }
      if (on) active[b].insert(t);
    }
  }
  return active;
}

}  // namespace blockscope

#endif  // BLOCKSCOPE_ORACLES_HPP
