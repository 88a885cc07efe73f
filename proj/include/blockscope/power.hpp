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

// Relative per-block power score
//
//     P_avg = P_s + P_D * alpha * f
//
// P_s (uW) and P_D (pJ per active cycle) come from the block's resource
// counts; alpha is the fraction of profiled cycles in which the block is
// active. A block is active in cycle t when one of its own rules fires in t,
// or when a rule fired in t-1 and wrote state that the block reads.
//
// Scores compare blocks within one device only.

#ifndef BLOCKSCOPE_POWER_HPP
#define BLOCKSCOPE_POWER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blockscope/annotation.hpp"
#include "blockscope/area.hpp"
#include "blockscope/profile.hpp"
#include "blockscope/text_format.hpp"

namespace blockscope {

inline constexpr std::string_view kPowerMagic = "blockscope-power";
inline constexpr std::string_view kRelativeScoreBanner =
    "power scores are relative; do not compare them across device profiles";

struct PowerModel {
  KindTable static_uw;
  KindTable dynamic_pj;
  double frequency_hz = 100e6;

  /// Placeholder coefficients: LUTk 0.1k uW / 0.5k pJ, FF 0.2 uW / 1 pJ,
  /// ports free.
  static PowerModel defaults() {
    PowerModel model;
    for (int k = 1; k <= 6; ++k) {
      const auto kind = resource_of(lut_of_size(k));
      model.static_uw[kind] = 0.1 * k;
      model.dynamic_pj[kind] = 0.5 * k;
    }
    model.static_uw[ResourceKind::FF] = 0.2;
    model.dynamic_pj[ResourceKind::FF] = 1.0;
    return model;
  }

  friend bool operator==(const PowerModel&, const PowerModel&) = default;
};

/// Reads `static <KIND> <uW>`, `dynamic <KIND> <pJ>` and `frequency <Hz>`
/// lines on top of the default model. An optional `blockscope-power v1`
/// header may come first.
inline PowerModel parse_power_model(std::string_view text) {
  PowerModel model = PowerModel::defaults();
  std::set<std::pair<std::string, ResourceKind>> seen;
  bool seen_frequency = false;
  const std::vector<Line> lines = detail::tokenize(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string_view directive = line.tokens.front().text;
    if (directive == kPowerMagic) {
      if (i != 0) throw ParseError("lexical", "header must be the first line", line.number, 1);
      detail::expect_header(line, kPowerMagic, "v1");
    } else if (directive == "static" || directive == "dynamic") {
      detail::expect_arity(line, 3, std::string(directive) + " <KIND> <value>");
      const auto kind = parse_resource_kind(line.tokens[1].text);
      if (!kind) {
        throw ParseError("unknown-kind", "unknown resource kind " + std::string(line.tokens[1].text),
                         line.number, line.tokens[1].column);
      }
      const double value = detail::parse_decimal(line, line.tokens[2], "coefficient");
      if (!seen.emplace(std::string(directive), *kind).second) {
        throw ParseError("duplicate-coefficient",
                         std::string(directive) + " coefficient for " + std::string(to_string(*kind)) +
                             " given twice",
                         line.number, 1);
      }
      (directive == "static" ? model.static_uw : model.dynamic_pj)[*kind] = value;
    } else if (directive == "frequency") {
      detail::expect_arity(line, 2, "frequency <Hz>");
      const double hz = detail::parse_decimal(line, line.tokens[1], "frequency");
      if (!(hz > 0.0)) {
        throw ParseError("invalid-frequency", "frequency must be positive", line.number, line.tokens[1].column);
      }
      if (seen_frequency) throw ParseError("duplicate-coefficient", "frequency given twice", line.number, 1);
      seen_frequency = true;
      model.frequency_hz = hz;
    } else {
      throw ParseError("unknown-directive", "unknown directive '" + std::string(directive) + "'", line.number,
                       line.tokens.front().column);
    }
  }
  return model;
}

/// Sum of static coefficients over the block's resources (uW).
inline double static_power(const BlockLabel& block, const BlockRegistry& registry, const Netlist& netlist,
                           const PowerModel& model) {
  return model.static_uw.dot(count_resources(detail::CellLookup(netlist), registry.cells(block)));
}

/// Energy of one active cycle of the block (pJ).
inline double dynamic_coefficient(const BlockLabel& block, const BlockRegistry& registry,
                                  const Netlist& netlist, const PowerModel& model) {
  return model.dynamic_pj.dot(count_resources(detail::CellLookup(netlist), registry.cells(block)));
}

struct BlockActivity {
  std::uint64_t active_cycles = 0;
  Cycle cycles = 0;
  /// Activation causes before per-cycle capping: own firings plus, per
  /// (writer rule, read state) dependency, the writer's firings that fall
  /// before the last cycle.
  std::uint64_t events = 0;
  /// False when neither a rule nor a read names the block.
  bool in_profile = false;

  double alpha() const { return cycles == 0 ? 0.0 : static_cast<double>(active_cycles) / static_cast<double>(cycles); }
  friend bool operator==(const BlockActivity&, const BlockActivity&) = default;
};

/// Activity of `block` over the profile. When `group_depth` is set, profile
/// labels are truncated to that depth before matching, so a grouped block
/// collects the activity of all its members.
inline BlockActivity switching_factor(const BlockLabel& block, const ActivityProfile& profile,
                                      std::optional<std::size_t> group_depth = std::nullopt) {
  const auto matches = [&](const BlockLabel& label) {
    return (group_depth ? label.truncated(*group_depth) : label) == block;
  };

  BlockActivity activity;
  activity.cycles = profile.cycles;
  std::vector<bool> active(profile.cycles, false);

  for (const auto& [rule, label] : profile.rule_block) {
    if (!matches(label)) continue;
    activity.in_profile = true;
    if (const auto it = profile.firings.find(rule); it != profile.firings.end()) {
      for (Cycle c : it->second) {
        active[c] = true;
        ++activity.events;
      }
    }
  }

  std::set<std::string> read_states;
  for (const auto& [label, state] : profile.reads) {
    if (!matches(label)) continue;
    activity.in_profile = true;
    read_states.insert(state);
  }
  for (const auto& [rule, state] : profile.writes) {
    if (!read_states.count(state)) continue;
    const auto it = profile.firings.find(rule);
    if (it == profile.firings.end()) continue;
    for (Cycle c : it->second) {
      if (c + 1 < profile.cycles) {
        active[c + 1] = true;
        ++activity.events;
      }
    }
  }

  activity.active_cycles = static_cast<std::uint64_t>(std::count(active.begin(), active.end(), true));
  return activity;
}

struct PowerEntry {
  double static_uw = 0.0;
  double dynamic_pj = 0.0;
  BlockActivity activity;
  double average_uw = 0.0;

  double alpha() const { return activity.alpha(); }
  friend bool operator==(const PowerEntry&, const PowerEntry&) = default;
};

/// P_avg in uW from P_s [uW], P_D [pJ], alpha and f [Hz]; 1 pJ * 1 Hz is
/// 1e-12 W, i.e. 1e-6 uW.
inline double average_power_uw(double static_uw, double dynamic_pj, double alpha, double frequency_hz) {
  return static_uw + dynamic_pj * alpha * frequency_hz * 1e-6;
}

struct PowerScore {
  std::map<BlockLabel, PowerEntry> per_block;
  PowerEntry unannotated;
  std::vector<BlockLabel> ranking;  // descending P_avg, ties by label
  double frequency_hz = 0.0;

  friend bool operator==(const PowerScore&, const PowerScore&) = default;
};

inline std::vector<BlockLabel> rank_by_power(const std::map<BlockLabel, PowerEntry>& per_block) {
  std::vector<BlockLabel> ranking;
  for (const auto& [label, entry] : per_block) ranking.push_back(label);
  std::stable_sort(ranking.begin(), ranking.end(), [&](const BlockLabel& a, const BlockLabel& b) {
    return per_block.at(a).average_uw > per_block.at(b).average_uw;
  });
  return ranking;
}

inline PowerScore power_score(const Netlist& netlist, const BlockRegistry& registry, const PowerModel& model,
                              const ActivityProfile& profile,
                              std::optional<std::size_t> group_depth = std::nullopt) {
  const detail::CellLookup lookup(netlist);
  const auto entry = [&](std::span<const std::string> ids, BlockActivity activity) {
    PowerEntry e;
    const ResourceCounts counts = count_resources(lookup, ids);
    e.static_uw = model.static_uw.dot(counts);
    e.dynamic_pj = model.dynamic_pj.dot(counts);
    e.activity = activity;
    e.average_uw = average_power_uw(e.static_uw, e.dynamic_pj, e.alpha(), model.frequency_hz);
    return e;
  };

  PowerScore score;
  score.frequency_hz = model.frequency_hz;
  for (const auto& [label, cells] : registry.blocks()) {
    score.per_block.emplace(label, entry(cells, switching_factor(label, profile, group_depth)));
  }
  score.unannotated = entry(registry.unannotated(), BlockActivity{0, profile.cycles, 0, false});
  score.ranking = rank_by_power(score.per_block);
  return score;
}

}  // namespace blockscope

#endif  // BLOCKSCOPE_POWER_HPP
