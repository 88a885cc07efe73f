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

// Block annotations: a cell named `<label>__<local>` belongs to block
// <label>, where <label> is a `.`-separated hierarchy such as `cpu.exec`.
// Cells without the `__` delimiter were merged or created by synthesis and
// land in the unannotated pseudo-block.

#ifndef BLOCKSCOPE_ANNOTATION_HPP
#define BLOCKSCOPE_ANNOTATION_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockscope/netlist.hpp"

namespace blockscope {

inline constexpr std::string_view kAnnotationDelimiter = "__";
inline constexpr std::string_view kUnannotatedName = "(unannotated)";

class BlockLabel {
 public:
  BlockLabel() = default;

  /// Throws Error("malformed-label") on an empty or illegal segment.
  explicit BlockLabel(std::vector<std::string> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw Error("malformed-label", "block label has no segments");
    for (const std::string& segment : segments_) {
      if (!is_valid_segment(segment)) {
        throw Error("malformed-label", "illegal block label segment '" + segment + "'");
      }
    }
  }

  /// Parses the dotted rendering, e.g. "cpu.exec".
  static BlockLabel parse(std::string_view text) {
    std::vector<std::string> segments;
    std::size_t start = 0;
    while (true) {
      const std::size_t dot = text.find('.', start);
      segments.emplace_back(text.substr(start, dot == std::string_view::npos ? text.npos : dot - start));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
    return BlockLabel(std::move(segments));
  }

  static bool is_valid_segment(std::string_view segment) {
    if (segment.empty() || segment.find(kAnnotationDelimiter) != std::string_view::npos) return false;
    return std::all_of(segment.begin(), segment.end(), [](char c) {
      return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
  }

  const std::vector<std::string>& segments() const { return segments_; }
  std::size_t depth() const { return segments_.size(); }

  BlockLabel truncated(std::size_t depth) const {
    if (depth >= segments_.size()) return *this;
    BlockLabel out;
    out.segments_.assign(segments_.begin(), segments_.begin() + static_cast<std::ptrdiff_t>(depth));
    return out;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < segments_.size(); ++i) {
      if (i) out += '.';
      out += segments_[i];
    }
    return out;
  }

  // Segment characters all sort after '.', so this ordering agrees with
  // comparing the dotted renderings.
  friend auto operator<=>(const BlockLabel&, const BlockLabel&) = default;
  friend bool operator==(const BlockLabel&, const BlockLabel&) = default;

 private:
  std::vector<std::string> segments_;
};

/// Label encoded in a cell id, or nullopt for unannotated cells. The first
/// `__` separates the label from the local name.
inline std::optional<BlockLabel> extract_block_label(std::string_view cell_id) {
  const std::size_t at = cell_id.find(kAnnotationDelimiter);
  if (at == std::string_view::npos) return std::nullopt;
  try {
    return BlockLabel::parse(cell_id.substr(0, at));
  } catch (const Error& e) {
    throw Error("malformed-label", "cell '" + std::string(cell_id) + "': " + e.what());
  }
}

/// Partition of a netlist's cells into blocks plus the unannotated remainder.
/// Cell id lists are sorted.
class BlockRegistry {
 public:
  using BlockMap = std::map<BlockLabel, std::vector<std::string>>;

  BlockRegistry() = default;
  BlockRegistry(BlockMap blocks, std::vector<std::string> unannotated)
      : blocks_(std::move(blocks)), unannotated_(std::move(unannotated)) {
    for (auto& [label, cells] : blocks_) std::sort(cells.begin(), cells.end());
    std::sort(unannotated_.begin(), unannotated_.end());
  }

  const BlockMap& blocks() const { return blocks_; }
  const std::vector<std::string>& unannotated() const { return unannotated_; }

  bool contains(const BlockLabel& label) const { return blocks_.count(label) != 0; }

  const std::vector<std::string>& cells(const BlockLabel& label) const {
    const auto it = blocks_.find(label);
    if (it == blocks_.end()) throw Error("unknown-block", "unknown block '" + label.str() + "'");
    return it->second;
  }

  std::vector<BlockLabel> labels() const {
    std::vector<BlockLabel> out;
    for (const auto& [label, cells] : blocks_) out.push_back(label);
    return out;
  }

  std::size_t annotated_count() const {
    std::size_t n = 0;
    for (const auto& [label, cells] : blocks_) n += cells.size();
    return n;
  }

  std::size_t cell_count() const { return annotated_count() + unannotated_.size(); }

  double unannotated_fraction() const {
    const std::size_t total = cell_count();
    return total == 0 ? 0.0 : static_cast<double>(unannotated_.size()) / static_cast<double>(total);
  }

  std::size_t max_depth() const {
    std::size_t depth = 0;
    for (const auto& [label, cells] : blocks_) depth = std::max(depth, label.depth());
    return depth;
  }

  friend bool operator==(const BlockRegistry&, const BlockRegistry&) = default;

 private:
  BlockMap blocks_;
  std::vector<std::string> unannotated_;
};

inline BlockRegistry build_registry(const Netlist& netlist) {
  std::vector<const Cell*> cells;
  for (const Cell& cell : netlist.cells) cells.push_back(&cell);
  std::sort(cells.begin(), cells.end(), [](const Cell* a, const Cell* b) { return a->id < b->id; });

  BlockRegistry::BlockMap blocks;
  std::vector<std::string> unannotated;
  for (const Cell* cell : cells) {
    if (auto label = extract_block_label(cell->id)) {
      blocks[*label].push_back(cell->id);
    } else {
      unannotated.push_back(cell->id);
    }
  }
  return BlockRegistry(std::move(blocks), std::move(unannotated));
}

/// Truncates every label to `depth` segments and unions the cell sets of
/// labels that collapse together.
inline BlockRegistry group_to_depth(const BlockRegistry& registry, std::size_t depth) {
  if (depth < 1) throw Error("invalid-depth", "group depth must be at least 1");
  BlockRegistry::BlockMap grouped;
  for (const auto& [label, cells] : registry.blocks()) {
    auto& target = grouped[label.truncated(depth)];
    target.insert(target.end(), cells.begin(), cells.end());
  }
  return BlockRegistry(std::move(grouped), registry.unannotated());
}

}  // namespace blockscope

#endif  // BLOCKSCOPE_ANNOTATION_HPP
