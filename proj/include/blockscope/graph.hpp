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

#ifndef BLOCKSCOPE_GRAPH_HPP
#define BLOCKSCOPE_GRAPH_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "blockscope/netlist.hpp"

namespace blockscope {

/// Dense node index. Indices follow ascending cell-id order, so comparing
/// indices is the same as comparing ids.
using CellIndex = std::size_t;

struct Edge {
  CellIndex to = 0;
  Picoseconds delay = 0;
};

/// Immutable, validated, index-based view of a Netlist. Safe to share
/// read-only between analysis threads.
class TimingGraph {
 public:
  explicit TimingGraph(const Netlist& netlist) {
    ValidationReport report = validate(netlist);
    if (!report.ok()) throw ValidationError(std::move(report.violations));

    std::vector<const Cell*> sorted;
    sorted.reserve(netlist.cells.size());
    for (const Cell& cell : netlist.cells) sorted.push_back(&cell);
    std::sort(sorted.begin(), sorted.end(),
              [](const Cell* a, const Cell* b) { return a->id < b->id; });
    for (const Cell* cell : sorted) {
      ids_.push_back(cell->id);
      kinds_.push_back(cell->kind);
      logic_delay_.push_back(cell->logic_delay);
    }
    for (CellIndex i = 0; i < ids_.size(); ++i) index_.emplace(ids_[i], i);

    out_.resize(ids_.size());
    in_.resize(ids_.size());
    for (const Net& net : netlist.nets) {
      const CellIndex s = index_.at(net.src);
      const CellIndex d = index_.at(net.dst);
      out_[s].push_back({d, net.net_delay});
      in_[d].push_back({s, net.net_delay});
    }
    const auto by_target = [](const Edge& a, const Edge& b) { return a.to < b.to; };
    for (auto& edges : out_) std::sort(edges.begin(), edges.end(), by_target);
    for (auto& edges : in_) std::sort(edges.begin(), edges.end(), by_target);

    partner_.assign(ids_.size(), std::nullopt);
    for (const FfPair& pair : netlist.ff_pairs) {
      const CellIndex d = index_.at(pair.d);
      const CellIndex q = index_.at(pair.q);
      partner_[d] = q;
      partner_[q] = d;
    }

    std::vector<std::vector<std::size_t>> out(ids_.size()), in(ids_.size());
    for (CellIndex v = 0; v < ids_.size(); ++v) {
      for (const Edge& e : out_[v]) out[v].push_back(e.to);
      for (const Edge& e : in_[v]) in[v].push_back(e.to);
    }
    topo_ = detail::kahn(ids_.size(), out, in).order;
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  const std::string& id(CellIndex v) const { return ids_[v]; }
  CellKind kind(CellIndex v) const { return kinds_[v]; }
  Picoseconds logic_delay(CellIndex v) const { return logic_delay_[v]; }
  const std::vector<Edge>& fanout(CellIndex v) const { return out_[v]; }
  const std::vector<Edge>& fanin(CellIndex v) const { return in_[v]; }

  /// The other port of v's flip-flop, if v is a paired FF_D/FF_Q.
  std::optional<CellIndex> ff_partner(CellIndex v) const { return partner_[v]; }

  std::optional<CellIndex> find(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Lexicographically tie-broken topological order.
  const std::vector<CellIndex>& topological() const { return topo_; }

  /// Delay of the net src -> dst, if present.
  std::optional<Picoseconds> net_delay(CellIndex src, CellIndex dst) const {
    const auto& edges = out_[src];
    const auto it = std::lower_bound(edges.begin(), edges.end(), dst,
                                     [](const Edge& e, CellIndex t) { return e.to < t; });
    if (it == edges.end() || it->to != dst) return std::nullopt;
    return it->delay;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<CellKind> kinds_;
  std::vector<Picoseconds> logic_delay_;
  std::unordered_map<std::string, CellIndex> index_;
  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;
  std::vector<std::optional<CellIndex>> partner_;
  std::vector<CellIndex> topo_;
};

}  // namespace blockscope

#endif  // BLOCKSCOPE_GRAPH_HPP
