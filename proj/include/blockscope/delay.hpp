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

// Block-level delay analysis.
//
// For each block the cells it owns seed an expansion to every combinational
// path (source kind to sink kind) that crosses at least one of them. The
// expanded subgraph is split into weakly connected sets, and the longest
// path through the block is searched in each set under one of two
// weightings:
//
//   SystemDelay  every cell contributes its logic delay and every net its
//                routing delay; this is the block's worst contribution to a
//                system-level critical path.
//   BlockDelay   only the block's own cells contribute logic delay, and only
//                nets with both ends inside the block contribute routing
//                delay; this is the delay attributable to the block itself.
//
// Longest paths are found by dynamic programming over a topological order
// with integer weights. Among equal-weight paths the lexicographically
// smallest cell-id sequence wins.

#ifndef BLOCKSCOPE_DELAY_HPP
#define BLOCKSCOPE_DELAY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "blockscope/annotation.hpp"
#include "blockscope/graph.hpp"
#include "blockscope/parallel.hpp"

namespace blockscope {

enum class WeightingMode { SystemDelay, BlockDelay };

struct DelayOptions {
  /// Count nets with both ends inside the block under BlockDelay. When
  /// false only the block's cells carry weight.
  bool block_nets = true;
  unsigned threads = 1;
};

struct PathResult {
  Picoseconds total_delay = 0;
  Picoseconds logic_delay = 0;
  Picoseconds network_delay = 0;
  std::vector<std::string> path;

  bool empty() const { return path.empty(); }
  friend bool operator==(const PathResult&, const PathResult&) = default;
};

/// Node and edge subset of a TimingGraph. Both lists are sorted.
struct Subgraph {
  std::vector<CellIndex> nodes;
  std::vector<std::pair<CellIndex, CellIndex>> edges;

  std::size_t size() const { return nodes.size(); }
  bool empty() const { return nodes.empty(); }
  friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

struct BlockDelays {
  PathResult system;
  PathResult block;
  std::vector<std::size_t> set_sizes;  // node counts of the connected sets

  friend bool operator==(const BlockDelays&, const BlockDelays&) = default;
};

struct DelayReport {
  std::map<BlockLabel, BlockDelays> per_block;
  std::optional<BlockDelays> unannotated;
  PathResult global_critical;
  std::set<BlockLabel> critical_blocks;

  friend bool operator==(const DelayReport&, const DelayReport&) = default;
};

/// Sorted indices of the cells a block owns in `graph`.
inline std::vector<CellIndex> annotated_nodes(const TimingGraph& graph, const BlockRegistry& registry,
                                              const BlockLabel& block) {
  std::vector<CellIndex> nodes;
  for (const std::string& id : registry.cells(block)) {
    const auto v = graph.find(id);
    if (!v) throw Error("registry-mismatch", "registry cell '" + id + "' is not in the netlist");
    nodes.push_back(*v);
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

namespace detail {

// Cells reachable from `starts` following fanout (forward) or fanin.
inline std::vector<bool> closure(const TimingGraph& graph, const std::vector<CellIndex>& starts, bool forward) {
  std::vector<bool> mark(graph.size(), false);
  std::vector<CellIndex> stack;
  for (CellIndex v : starts) {
    if (!mark[v]) {
      mark[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const CellIndex v = stack.back();
    stack.pop_back();
    for (const Edge& e : forward ? graph.fanout(v) : graph.fanin(v)) {
      if (!mark[e.to]) {
        mark[e.to] = true;
        stack.push_back(e.to);
      }
    }
  }
  return mark;
}

}  // namespace detail

/// Union of all source-to-sink paths that contain at least one seed cell.
inline Subgraph expand_paths(const TimingGraph& graph, std::span<const CellIndex> seeds) {
  std::vector<CellIndex> sources, sinks;
  for (CellIndex v = 0; v < graph.size(); ++v) {
    if (is_source(graph.kind(v))) sources.push_back(v);
    if (is_sink(graph.kind(v))) sinks.push_back(v);
  }
  const std::vector<bool> from_source = detail::closure(graph, sources, true);
  const std::vector<bool> to_sink = detail::closure(graph, sinks, false);

  // Only seeds lying on some source-to-sink path take part.
  std::vector<CellIndex> live;
  for (CellIndex s : seeds) {
    if (from_source[s] && to_sink[s]) live.push_back(s);
  }
  const std::vector<bool> upstream = detail::closure(graph, live, false);   // reaches a live seed
  const std::vector<bool> downstream = detail::closure(graph, live, true);  // reached from a live seed

  Subgraph sub;
  std::vector<bool> in_nodes(graph.size(), false);
  for (CellIndex u = 0; u < graph.size(); ++u) {
    for (const Edge& e : graph.fanout(u)) {
      const CellIndex v = e.to;
      // u -> v lies on a qualifying path iff a seed precedes it (u is
      // downstream of a seed and v still reaches a sink) or follows it
      // (v reaches a seed and u is reachable from a source).
      if ((downstream[u] && to_sink[v]) || (upstream[v] && from_source[u])) {
        sub.edges.emplace_back(u, v);
        in_nodes[u] = in_nodes[v] = true;
      }
    }
  }
  for (CellIndex v = 0; v < graph.size(); ++v) {
    if (in_nodes[v]) sub.nodes.push_back(v);
  }
  return sub;
}

/// Whole graph as a subgraph.
inline Subgraph full_subgraph(const TimingGraph& graph) {
  Subgraph sub;
  sub.nodes.resize(graph.size());
  std::iota(sub.nodes.begin(), sub.nodes.end(), CellIndex{0});
  for (CellIndex u = 0; u < graph.size(); ++u) {
    for (const Edge& e : graph.fanout(u)) sub.edges.emplace_back(u, e.to);
  }
  return sub;
}

/// Weakly connected components, ordered by their smallest cell.
inline std::vector<Subgraph> connected_sets(const Subgraph& subgraph) {
  const auto local = [&](CellIndex v) {
    return static_cast<std::size_t>(std::lower_bound(subgraph.nodes.begin(), subgraph.nodes.end(), v) -
                                    subgraph.nodes.begin());
  };
  std::vector<std::size_t> parent(subgraph.nodes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : subgraph.edges) {
    const std::size_t a = find(local(u));
    const std::size_t b = find(local(v));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);  // root = smallest member
  }

  std::vector<Subgraph> sets;
  std::vector<std::size_t> set_of_root(subgraph.nodes.size(), SIZE_MAX);
  for (std::size_t i = 0; i < subgraph.nodes.size(); ++i) {
    const std::size_t root = find(i);
    if (set_of_root[root] == SIZE_MAX) {
      set_of_root[root] = sets.size();
      sets.emplace_back();
    }
    sets[set_of_root[root]].nodes.push_back(subgraph.nodes[i]);
  }
  for (const auto& edge : subgraph.edges) {
    sets[set_of_root[find(local(edge.first))]].edges.push_back(edge);
  }
  return sets;
}

namespace detail {

struct IndexPath {
  Picoseconds total = 0;
  Picoseconds logic = 0;
  Picoseconds network = 0;
  std::vector<CellIndex> cells;

  // Heavier first, then lexicographically smaller cell sequence.
  bool better_than(const IndexPath& other) const {
    if (cells.empty() || other.cells.empty()) return !cells.empty();
    if (total != other.total) return total > other.total;
    return cells < other.cells;
  }
};

inline PathResult to_result(const TimingGraph& graph, const IndexPath& path) {
  PathResult result{path.total, path.logic, path.network, {}};
  for (CellIndex v : path.cells) result.path.push_back(graph.id(v));
  return result;
}

// Longest path inside `set` that contains at least one `block` cell.
inline IndexPath longest_index_path(const TimingGraph& graph, const Subgraph& set,
                                    std::span<const CellIndex> block, WeightingMode mode,
                                    const DelayOptions& options) {
  const std::size_t n = set.nodes.size();
  if (n == 0) return {};
  const auto local = [&](CellIndex v) {
    return static_cast<std::size_t>(std::lower_bound(set.nodes.begin(), set.nodes.end(), v) - set.nodes.begin());
  };

  std::vector<bool> in_block(n, false);
  for (CellIndex v : block) {
    const std::size_t i = local(v);
    if (i < n && set.nodes[i] == v) in_block[i] = true;
  }

  struct Arc {
    std::size_t to;
    Picoseconds delay;
  };
  std::vector<std::vector<Arc>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [u, v] : set.edges) {
    out[local(u)].push_back({local(v), *graph.net_delay(u, v)});
    ++indegree[local(v)];
  }
  for (auto& arcs : out) {
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }

  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) order.push_back(i);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Arc& a : out[order[head]]) {
      if (--indegree[a.to] == 0) order.push_back(a.to);
    }
  }

  const bool system = mode == WeightingMode::SystemDelay;
  const auto node_weight = [&](std::size_t i) -> Picoseconds {
    return system || in_block[i] ? graph.logic_delay(set.nodes[i]) : 0;
  };
  const auto arc_weight = [&](std::size_t from, const Arc& a) -> Picoseconds {
    if (system) return a.delay;
    return options.block_nets && in_block[from] && in_block[a.to] ? a.delay : 0;
  };

  // best[i][seen]: heaviest suffix from node i to a sink such that the full
  // path holds a block cell, given whether one was seen before i.
  constexpr std::size_t kNone = SIZE_MAX;
  struct Suffix {
    bool valid = false;
    Picoseconds weight = 0;
    std::size_t next = kNone;
  };
  std::vector<std::array<Suffix, 2>> best(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t i = *it;
    for (int seen = 0; seen < 2; ++seen) {
      const int seen_after = seen || in_block[i] ? 1 : 0;
      Suffix& s = best[i][static_cast<std::size_t>(seen)];
      if (is_sink(graph.kind(set.nodes[i]))) {
        s = {seen_after == 1, node_weight(i), kNone};
        continue;
      }
      for (const Arc& a : out[i]) {  // ascending target: first max wins ties
        const Suffix& tail = best[a.to][static_cast<std::size_t>(seen_after)];
        if (!tail.valid) continue;
        const Picoseconds w = node_weight(i) + arc_weight(i, a) + tail.weight;
        if (!s.valid || w > s.weight) s = {true, w, a.to};
      }
    }
  }

  std::size_t start = kNone;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_source(graph.kind(set.nodes[i])) || !best[i][0].valid) continue;
    if (start == kNone || best[i][0].weight > best[start][0].weight) start = i;
  }
  if (start == kNone) return {};

  IndexPath path;
  path.total = best[start][0].weight;
  int seen = 0;
  for (std::size_t i = start; i != kNone;) {
    path.cells.push_back(set.nodes[i]);
    path.logic += node_weight(i);
    const Suffix& s = best[i][static_cast<std::size_t>(seen)];
    seen = seen || in_block[i] ? 1 : 0;
    if (s.next != kNone) {
      const auto arc = std::find_if(out[i].begin(), out[i].end(), [&](const Arc& a) { return a.to == s.next; });
      path.network += arc_weight(i, *arc);
    }
    i = s.next;
  }
  return path;
}

}  // namespace detail

/// Heaviest source-to-sink path of `set` that crosses the block, under the
/// given weighting. An empty set, or one with no such path, yields an empty
/// result with zero delay.
inline PathResult longest_path(const TimingGraph& graph, const Subgraph& set, std::span<const CellIndex> block,
                               WeightingMode mode, const DelayOptions& options = {}) {
  return detail::to_result(graph, detail::longest_index_path(graph, set, block, mode, options));
}

/// System and block delays of one block, taken as the best over its
/// connected sets.
inline BlockDelays analyze_block(const TimingGraph& graph, std::span<const CellIndex> cells,
                                 const DelayOptions& options = {}) {
  BlockDelays delays;
  detail::IndexPath system, block;
  for (const Subgraph& set : connected_sets(expand_paths(graph, cells))) {
    delays.set_sizes.push_back(set.size());
    detail::IndexPath s = detail::longest_index_path(graph, set, cells, WeightingMode::SystemDelay, options);
    detail::IndexPath b = detail::longest_index_path(graph, set, cells, WeightingMode::BlockDelay, options);
    if (s.better_than(system)) system = std::move(s);
    if (b.better_than(block)) block = std::move(b);
  }
  delays.system = detail::to_result(graph, system);
  delays.block = detail::to_result(graph, block);
  return delays;
}

/// Netlist-wide critical path under full weighting.
inline PathResult global_critical_path(const TimingGraph& graph) {
  const Subgraph all = full_subgraph(graph);
  return longest_path(graph, all, all.nodes, WeightingMode::SystemDelay);
}

inline DelayReport delay_report(const TimingGraph& graph, const BlockRegistry& registry,
                                const DelayOptions& options = {}) {
  const std::vector<BlockLabel> labels = registry.labels();
  std::vector<std::vector<CellIndex>> members;
  for (const BlockLabel& label : labels) members.push_back(annotated_nodes(graph, registry, label));
  std::vector<CellIndex> unannotated;
  for (const std::string& id : registry.unannotated()) {
    const auto v = graph.find(id);
    if (!v) throw Error("registry-mismatch", "registry cell '" + id + "' is not in the netlist");
    unannotated.push_back(*v);
  }
  std::sort(unannotated.begin(), unannotated.end());

  // Slot labels.size() holds the unannotated pseudo-block.
  std::vector<BlockDelays> results(labels.size() + 1);
  parallel_for(results.size(), options.threads, [&](std::size_t i) {
    if (i < labels.size()) {
      results[i] = analyze_block(graph, members[i], options);
    } else if (!unannotated.empty()) {
      results[i] = analyze_block(graph, unannotated, options);
    }
  });

  DelayReport report;
  for (std::size_t i = 0; i < labels.size(); ++i) report.per_block.emplace(labels[i], std::move(results[i]));
  if (!unannotated.empty()) report.unannotated = std::move(results.back());

  report.global_critical = global_critical_path(graph);
  std::map<std::string, const BlockLabel*> owner;
  for (const auto& [label, cells] : registry.blocks()) {
    for (const std::string& id : cells) owner.emplace(id, &label);
  }
  for (const std::string& id : report.global_critical.path) {
    if (const auto it = owner.find(id); it != owner.end()) report.critical_blocks.insert(*it->second);
  }
  return report;
}

}  // namespace blockscope

#endif  // BLOCKSCOPE_DELAY_HPP
