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

#ifndef BLOCKSCOPE_AREA_HPP
#define BLOCKSCOPE_AREA_HPP

#include <array>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "blockscope/annotation.hpp"
#include "blockscope/netlist.hpp"

namespace blockscope {

/// Per-resource-kind tally for a set of cells.
struct ResourceCounts {
  std::array<std::size_t, kResourceKindCount> by_kind{};
  /// FF_D/FF_Q ports without an ffpair entry; each is counted as one FF.
  std::size_t unpaired_ff_ports = 0;

  std::size_t operator[](ResourceKind kind) const { return by_kind[index_of(kind)]; }
  std::size_t& operator[](ResourceKind kind) { return by_kind[index_of(kind)]; }

  std::size_t luts() const {
    std::size_t n = 0;
    for (ResourceKind k : {ResourceKind::LUT1, ResourceKind::LUT2, ResourceKind::LUT3, ResourceKind::LUT4,
                           ResourceKind::LUT5, ResourceKind::LUT6}) {
      n += (*this)[k];
    }
    return n;
  }

  ResourceCounts& operator+=(const ResourceCounts& other) {
    for (std::size_t i = 0; i < by_kind.size(); ++i) by_kind[i] += other.by_kind[i];
    unpaired_ff_ports += other.unpaired_ff_ports;
    return *this;
  }

  friend bool operator==(const ResourceCounts&, const ResourceCounts&) = default;
};

/// Per-resource coefficient table; used both for area weights and for the
/// static/dynamic power coefficients.
struct KindTable {
  std::array<double, kResourceKindCount> value{};

  double operator[](ResourceKind kind) const { return value[index_of(kind)]; }
  double& operator[](ResourceKind kind) { return value[index_of(kind)]; }

  /// Σ count(kind) × value(kind), summed in fixed kind order.
  double dot(const ResourceCounts& counts) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < value.size(); ++i) sum += static_cast<double>(counts.by_kind[i]) * value[i];
    return sum;
  }

  friend bool operator==(const KindTable&, const KindTable&) = default;
};

struct AreaWeights : KindTable {
  /// LUTs and FFs weigh 1, ports weigh nothing.
  static AreaWeights defaults() {
    AreaWeights w;
    for (ResourceKind k : kAllResourceKinds) w[k] = 0.0;
    for (ResourceKind k : {ResourceKind::LUT1, ResourceKind::LUT2, ResourceKind::LUT3, ResourceKind::LUT4,
                           ResourceKind::LUT5, ResourceKind::LUT6, ResourceKind::FF}) {
      w[k] = 1.0;
    }
    return w;
  }
};

struct AreaEntry {
  ResourceCounts counts;
  std::size_t cells = 0;
  double weighted_area = 0.0;

  friend bool operator==(const AreaEntry&, const AreaEntry&) = default;
};

struct AreaReport {
  std::map<BlockLabel, AreaEntry> per_block;
  AreaEntry unannotated;
  AreaEntry totals;

  friend bool operator==(const AreaReport&, const AreaReport&) = default;
};

namespace detail {

struct CellLookup {
  std::unordered_map<std::string, const Cell*> cells;
  std::unordered_map<std::string, bool> paired;  // FF port id -> has ffpair

  explicit CellLookup(const Netlist& netlist) {
    for (const Cell& cell : netlist.cells) cells.emplace(cell.id, &cell);
    for (const FfPair& pair : netlist.ff_pairs) {
      paired[pair.d] = true;
      paired[pair.q] = true;
    }
  }

  const Cell& at(const std::string& id) const {
    const auto it = cells.find(id);
    if (it == cells.end()) {
      throw Error("registry-mismatch", "registry cell '" + id + "' is not in the netlist");
    }
    return *it->second;
  }

  bool is_paired(const std::string& id) const { return paired.count(id) != 0; }
};

}  // namespace detail

/// Counts resources of the given cells. A paired flip-flop is one FF and is
/// attributed to the owner of its D port; its Q port adds nothing.
inline ResourceCounts count_resources(const detail::CellLookup& lookup, std::span<const std::string> ids) {
  ResourceCounts counts;
  for (const std::string& id : ids) {
    const Cell& cell = lookup.at(id);
    if (cell.kind == CellKind::FF_D || cell.kind == CellKind::FF_Q) {
      if (!lookup.is_paired(id)) {
        ++counts[ResourceKind::FF];
        ++counts.unpaired_ff_ports;
      } else if (cell.kind == CellKind::FF_D) {
        ++counts[ResourceKind::FF];
      }
      continue;
    }
    ++counts[resource_of(cell.kind)];
  }
  return counts;
}

/// Resource census of the whole netlist, independent of any registry.
inline ResourceCounts resource_census(const Netlist& netlist) {
  const detail::CellLookup lookup(netlist);
  std::vector<std::string> ids;
  for (const Cell& cell : netlist.cells) ids.push_back(cell.id);
  return count_resources(lookup, ids);
}

inline AreaReport area_report(const Netlist& netlist, const BlockRegistry& registry,
                              const AreaWeights& weights = AreaWeights::defaults()) {
  const detail::CellLookup lookup(netlist);
  const auto entry = [&](std::span<const std::string> ids) {
    AreaEntry e;
    e.counts = count_resources(lookup, ids);
    e.cells = ids.size();
    e.weighted_area = weights.dot(e.counts);
    return e;
  };

  AreaReport report;
  for (const auto& [label, cells] : registry.blocks()) {
    AreaEntry e = entry(cells);
    report.totals.counts += e.counts;
    report.totals.cells += e.cells;
    report.per_block.emplace(label, std::move(e));
  }
  report.unannotated = entry(registry.unannotated());
  report.totals.counts += report.unannotated.counts;
  report.totals.cells += report.unannotated.cells;
  report.totals.weighted_area = weights.dot(report.totals.counts);
  return report;
}

}  // namespace blockscope

#endif  // BLOCKSCOPE_AREA_HPP
