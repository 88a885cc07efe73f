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

// Plain data model of a synthesized circuit: cells are graph nodes carrying
// a logic delay, nets are point-to-point edges carrying a routing delay.
// A Netlist may hold invalid content (it is what the parser and generators
// produce); validate() decides whether it is analyzable.

#ifndef BLOCKSCOPE_NETLIST_HPP
#define BLOCKSCOPE_NETLIST_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "blockscope/types.hpp"

namespace blockscope {

struct Cell {
  std::string id;
  CellKind kind = CellKind::LUT1;
  Picoseconds logic_delay = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct Net {
  std::string src;
  std::string dst;
  Picoseconds net_delay = 0;

  friend bool operator==(const Net&, const Net&) = default;
};

/// The D and Q ports of one flip-flop.
struct FfPair {
  std::string d;
  std::string q;

  friend bool operator==(const FfPair&, const FfPair&) = default;
};

struct Netlist {
  std::vector<Cell> cells;
  std::vector<Net> nets;
  std::vector<FfPair> ff_pairs;

  friend bool operator==(const Netlist&, const Netlist&) = default;
};

/// Ids are `[A-Za-z0-9_.]+` and must not start with a digit or `.`, so an id
/// can never be mistaken for a delay value.
inline bool is_valid_cell_id(std::string_view id) {
  if (id.empty()) return false;
  const auto word = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  };
  if (!word(id.front()) || (id.front() >= '0' && id.front() <= '9')) return false;
  return std::all_of(id.begin(), id.end(), [&](char c) { return word(c) || c == '.'; });
}

/// Cells sorted by id, nets by (src, dst), pairs by (d, q).
inline Netlist canonicalize(Netlist netlist) {
  std::sort(netlist.cells.begin(), netlist.cells.end(),
            [](const Cell& a, const Cell& b) { return a.id < b.id; });
  std::sort(netlist.nets.begin(), netlist.nets.end(), [](const Net& a, const Net& b) {
    return std::tie(a.src, a.dst, a.net_delay) < std::tie(b.src, b.dst, b.net_delay);
  });
  std::sort(netlist.ff_pairs.begin(), netlist.ff_pairs.end(),
            [](const FfPair& a, const FfPair& b) { return std::tie(a.d, a.q) < std::tie(b.d, b.q); });
  return netlist;
}

/// Equality of content irrespective of declaration order.
inline bool equivalent(const Netlist& a, const Netlist& b) {
  return canonicalize(a) == canonicalize(b);
}

struct Violation {
  std::string rule;
  std::vector<std::string> ids;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view rule) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.rule == rule; });
  }
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations)
      : Error(violations.empty() ? std::string("invalid-netlist") : violations.front().rule,
              summarize(violations)),
        violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string summarize(const std::vector<Violation>& violations) {
    if (violations.empty()) return "invalid netlist";
    std::string text = violations.front().rule + ": " + violations.front().message;
    if (violations.size() > 1) {
      text += " (and " + std::to_string(violations.size() - 1) + " more violation(s))";
    }
    return text;
  }

  std::vector<Violation> violations_;
};

namespace detail {

inline std::string join_ids(const std::vector<std::string>& ids, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += ids[i];
  }
  return out;
}

struct KahnResult {
  std::vector<std::size_t> order;     // indices into the sorted id table
  std::vector<std::size_t> cycle;     // empty when acyclic
};

// Kahn's algorithm over an index graph whose indices are already in
// ascending id order; the ready set is a min-heap so ties go to the
// lexicographically smallest id.
inline KahnResult kahn(std::size_t n, const std::vector<std::vector<std::size_t>>& out,
                       const std::vector<std::vector<std::size_t>>& in) {
  KahnResult result;
  std::vector<std::size_t> indegree(n);
  for (std::size_t v = 0; v < n; ++v) indegree[v] = in[v].size();
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<bool> done(n, false);
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    done[v] = true;
    result.order.push_back(v);
    for (std::size_t w : out[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (result.order.size() == n) return result;

  // Every unfinished node keeps an unfinished predecessor, so walking
  // predecessors from any of them must revisit a node.
  std::size_t start = 0;
  while (done[start]) ++start;
  std::vector<std::size_t> position(n, n);
  std::vector<std::size_t> walk;
  std::size_t v = start;
  while (position[v] == n) {
    position[v] = walk.size();
    walk.push_back(v);
    for (std::size_t p : in[v]) {
      if (!done[p]) {
        v = p;
        break;
      }
    }
  }
  std::vector<std::size_t> cycle(walk.begin() + static_cast<std::ptrdiff_t>(position[v]), walk.end());
  std::reverse(cycle.begin(), cycle.end());  // predecessor walk -> forward order
  const auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  result.cycle = std::move(cycle);
  return result;
}

}  // namespace detail

/// Checks every structural invariant of the model. Violations are listed in
/// a deterministic order: per-cell checks, per-net checks, pair checks,
/// then acyclicity.
inline ValidationReport validate(const Netlist& netlist) {
  ValidationReport report;
  auto add = [&](std::string rule, std::vector<std::string> ids, std::string message) {
    report.violations.push_back({std::move(rule), std::move(ids), std::move(message)});
  };

  std::map<std::string, const Cell*> by_id;
  for (const Cell& cell : netlist.cells) {
    if (!is_valid_cell_id(cell.id)) {
      add("invalid-cell-id", {cell.id}, "cell id '" + cell.id + "' is not a valid identifier");
    }
    if (!by_id.emplace(cell.id, &cell).second) {
      add("duplicate-cell-id", {cell.id}, "cell id '" + cell.id + "' is declared more than once");
    }
    if (cell.logic_delay < 0) {
      add("negative-delay", {cell.id}, "cell '" + cell.id + "' has a negative logic delay");
    }
    if (is_source(cell.kind) && cell.logic_delay != 0) {
      add("source-nonzero-delay", {cell.id},
          "source cell '" + cell.id + "' of kind " + std::string(to_string(cell.kind)) +
              " must have logic delay 0");
    }
  }

  std::set<std::pair<std::string, std::string>> seen_nets;
  bool dangling = false;
  for (const Net& net : netlist.nets) {
    const auto src = by_id.find(net.src);
    const auto dst = by_id.find(net.dst);
    if (src == by_id.end() || dst == by_id.end()) {
      dangling = true;
      const std::string& missing = src == by_id.end() ? net.src : net.dst;
      add("dangling-reference", {net.src, net.dst},
          "net " + net.src + " -> " + net.dst + " references undeclared cell '" + missing + "'");
      continue;
    }
    if (net.net_delay < 0) {
      add("negative-delay", {net.src, net.dst},
          "net " + net.src + " -> " + net.dst + " has a negative delay");
    }
    if (!seen_nets.emplace(net.src, net.dst).second) {
      add("duplicate-net", {net.src, net.dst},
          "net " + net.src + " -> " + net.dst + " is declared more than once");
    }
    if (is_source(dst->second->kind)) {
      add("edge-into-source-kind", {net.src, net.dst},
          "net " + net.src + " -> " + net.dst + " drives a " +
              std::string(to_string(dst->second->kind)) + " cell");
    }
    if (is_sink(src->second->kind)) {
      add("edge-out-of-sink-kind", {net.src, net.dst},
          "net " + net.src + " -> " + net.dst + " is driven by a " +
              std::string(to_string(src->second->kind)) + " cell");
    }
  }

  std::set<std::string> paired;
  for (const FfPair& pair : netlist.ff_pairs) {
    const auto check_port = [&](const std::string& id, CellKind expected) {
      const auto it = by_id.find(id);
      if (it == by_id.end()) {
        add("ffpair-dangling", {pair.d, pair.q}, "ffpair references undeclared cell '" + id + "'");
      } else if (it->second->kind != expected) {
        add("ffpair-kind", {pair.d, pair.q},
            "ffpair port '" + id + "' must be " + std::string(to_string(expected)) + ", found " +
                std::string(to_string(it->second->kind)));
      }
      if (!paired.insert(id).second) {
        add("ffpair-duplicate", {id}, "cell '" + id + "' appears in more than one ffpair");
      }
    };
    check_port(pair.d, CellKind::FF_D);
    check_port(pair.q, CellKind::FF_Q);
  }

  if (!dangling) {
    std::vector<std::string> ids;
    ids.reserve(by_id.size());
    std::unordered_map<std::string_view, std::size_t> index;
    for (const auto& [id, cell] : by_id) {
      index.emplace(id, ids.size());
      ids.push_back(id);
    }
    std::vector<std::vector<std::size_t>> out(ids.size()), in(ids.size());
    for (const auto& [src, dst] : seen_nets) {
      out[index.at(src)].push_back(index.at(dst));
      in[index.at(dst)].push_back(index.at(src));
    }
    const detail::KahnResult sorted = detail::kahn(ids.size(), out, in);
    if (!sorted.cycle.empty()) {
      std::vector<std::string> cycle_ids;
      for (std::size_t v : sorted.cycle) cycle_ids.push_back(ids[v]);
      add("combinational-cycle", cycle_ids,
          "combinational cycle through cells {" + detail::join_ids(cycle_ids) + "}");
    }
  }
  return report;
}

/// Deterministic topological order of cell ids: every net's src precedes
/// its dst and ready cells are emitted in ascending id order.
/// Throws ValidationError on an invalid netlist.
inline std::vector<std::string> topological_order(const Netlist& netlist) {
  ValidationReport report = validate(netlist);
  if (!report.ok()) throw ValidationError(std::move(report.violations));

  std::vector<std::string> ids;
  for (const Cell& cell : netlist.cells) ids.push_back(cell.id);
  std::sort(ids.begin(), ids.end());
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);
  std::vector<std::vector<std::size_t>> out(ids.size()), in(ids.size());
  for (const Net& net : netlist.nets) {
    out[index.at(net.src)].push_back(index.at(net.dst));
    in[index.at(net.dst)].push_back(index.at(net.src));
  }
  std::vector<std::string> order;
  for (std::size_t v : detail::kahn(ids.size(), out, in).order) order.push_back(ids[v]);
  return order;
}

}  // namespace blockscope

#endif  // BLOCKSCOPE_NETLIST_HPP
