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

// Readers and writers for the two exchange formats.
//
// Netlist (`.bnl`):
//
//     blockscope-netlist v1
//     cell <id> <KIND> <logic_delay_ps>
//     net <src_id> -> <dst_id> <net_delay_ps>
//     ffpair <d_id> <q_id>
//
// Activity profile (`.bpf`):
//
//     blockscope-profile v1
//     cycles <N>
//     rule <rule_id> block <block_label>
//     fires <rule_id> <c1,c2,...>
//     writes <rule_id> <state_id>
//     reads <block_label> <state_id>
//
// Both are line oriented; `#` starts a comment and blank lines are ignored.
// Parsing is strict: any unknown directive or malformed field is an error.

#ifndef BLOCKSCOPE_NETLIST_IO_HPP
#define BLOCKSCOPE_NETLIST_IO_HPP

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blockscope/annotation.hpp"
#include "blockscope/netlist.hpp"
#include "blockscope/profile.hpp"
#include "blockscope/text_format.hpp"

namespace blockscope {

inline constexpr std::string_view kNetlistMagic = "blockscope-netlist";
inline constexpr std::string_view kProfileMagic = "blockscope-profile";
inline constexpr std::string_view kFormatVersion = "v1";

struct NetlistDocument {
  std::string version = std::string(kFormatVersion);
  Netlist body;
  std::map<std::string, std::size_t> cell_lines;
  std::map<std::pair<std::string, std::string>, std::size_t> net_lines;
};

namespace detail {

inline std::string expect_id(const Line& line, const Token& token, std::string_view role) {
  if (!is_valid_cell_id(token.text)) {
    throw ParseError("lexical", "invalid " + std::string(role) + " '" + std::string(token.text) + "'",
                     line.number, token.column);
  }
  return std::string(token.text);
}

inline BlockLabel expect_label(const Line& line, const Token& token) {
  try {
    return BlockLabel::parse(token.text);
  } catch (const Error&) {
    throw ParseError("lexical", "invalid block label '" + std::string(token.text) + "'", line.number,
                     token.column);
  }
}

}  // namespace detail

inline NetlistDocument parse_netlist(std::string_view text) {
  const std::vector<Line> lines = detail::tokenize(text);
  if (lines.empty()) {
    throw ParseError("missing-header", "empty document, expected 'blockscope-netlist v1'", 1);
  }
  detail::expect_header(lines.front(), kNetlistMagic, kFormatVersion);

  NetlistDocument doc;
  Netlist& body = doc.body;
  std::map<std::string, std::size_t> ffpair_lines;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string_view directive = line.tokens.front().text;
    if (directive == "cell") {
      detail::expect_arity(line, 4, "cell <id> <KIND> <logic_delay_ps>");
      std::string id = detail::expect_id(line, line.tokens[1], "cell id");
      const auto kind = parse_cell_kind(line.tokens[2].text);
      if (!kind) {
        throw ParseError("unknown-kind", "unknown cell kind " + std::string(line.tokens[2].text),
                         line.number, line.tokens[2].column);
      }
      const Picoseconds delay = detail::parse_delay(line, line.tokens[3]);
      if (!doc.cell_lines.emplace(id, line.number).second) {
        throw ParseError("duplicate-cell-id", "duplicate cell id '" + id + "'", line.number,
                         line.tokens[1].column);
      }
      body.cells.push_back({std::move(id), *kind, delay});
    } else if (directive == "net") {
      detail::expect_arity(line, 5, "net <src_id> -> <dst_id> <net_delay_ps>");
      std::string src = detail::expect_id(line, line.tokens[1], "net source");
      if (line.tokens[2].text != "->") {
        throw ParseError("lexical", "expected '->', found '" + std::string(line.tokens[2].text) + "'",
                         line.number, line.tokens[2].column);
      }
      std::string dst = detail::expect_id(line, line.tokens[3], "net destination");
      const Picoseconds delay = detail::parse_delay(line, line.tokens[4]);
      if (!doc.net_lines.emplace(std::make_pair(src, dst), line.number).second) {
        throw ParseError("duplicate-net", "duplicate net " + src + " -> " + dst, line.number,
                         line.tokens[1].column);
      }
      body.nets.push_back({std::move(src), std::move(dst), delay});
    } else if (directive == "ffpair") {
      detail::expect_arity(line, 3, "ffpair <d_id> <q_id>");
      std::string d = detail::expect_id(line, line.tokens[1], "ffpair D port");
      std::string q = detail::expect_id(line, line.tokens[2], "ffpair Q port");
      ffpair_lines.emplace(d, line.number);
      ffpair_lines.emplace(q, line.number);
      body.ff_pairs.push_back({std::move(d), std::move(q)});
    } else if (directive == kNetlistMagic) {
      throw ParseError("lexical", "header repeated", line.number, line.tokens.front().column);
    } else {
      throw ParseError("unknown-directive", "unknown directive '" + std::string(directive) + "'",
                       line.number, line.tokens.front().column);
    }
  }

  // Remaining semantic checks are shared with validate(); map each
  // violation back to the line that declares its offending element.
  const ValidationReport report = validate(body);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    std::size_t line = lines.front().number;
    if (v.rule == "ffpair-dangling" || v.rule == "ffpair-kind" || v.rule == "ffpair-duplicate") {
      line = ffpair_lines.at(v.ids.front());
    } else if (v.ids.size() == 2 && v.rule != "combinational-cycle") {
      line = doc.net_lines.at({v.ids[0], v.ids[1]});
    } else if (const auto it = doc.cell_lines.find(v.ids.front()); it != doc.cell_lines.end()) {
      line = it->second;
    }
    throw ParseError(v.rule, v.message, line);
  }
  return doc;
}

/// Canonical text: cells sorted by id, nets by (src, dst), pairs by D port.
inline std::string serialize_netlist(const Netlist& netlist) {
  const Netlist canonical = canonicalize(netlist);
  std::ostringstream out;
  out << kNetlistMagic << ' ' << kFormatVersion << '\n';
  for (const Cell& cell : canonical.cells) {
    out << "cell " << cell.id << ' ' << to_string(cell.kind) << ' ' << cell.logic_delay << '\n';
  }
  for (const Net& net : canonical.nets) {
    out << "net " << net.src << " -> " << net.dst << ' ' << net.net_delay << '\n';
  }
  for (const FfPair& pair : canonical.ff_pairs) {
    out << "ffpair " << pair.d << ' ' << pair.q << '\n';
  }
  return out.str();
}

inline std::string serialize_netlist(const NetlistDocument& doc) { return serialize_netlist(doc.body); }

/// Parses an activity profile. The header line is optional; when present
/// it must be the first line and name version v1.
inline ActivityProfile parse_profile(std::string_view text) {
  const std::vector<Line> lines = detail::tokenize(text);
  ActivityProfile profile;

  struct Reference {
    std::size_t line;
    std::size_t column;
    std::string name;
  };
  std::vector<Reference> rule_refs;
  std::vector<std::pair<Reference, BlockLabel>> block_refs;
  std::vector<Reference> state_refs;
  std::vector<std::pair<Reference, Cycle>> cycle_refs;
  std::size_t cycles_line = 0;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string_view directive = line.tokens.front().text;
    if (directive == kProfileMagic) {
      if (i != 0) throw ParseError("lexical", "header must be the first line", line.number, 1);
      detail::expect_header(line, kProfileMagic, kFormatVersion);
    } else if (directive == "cycles") {
      detail::expect_arity(line, 2, "cycles <N>");
      if (cycles_line) {
        throw ParseError("duplicate-cycles", "cycles declared twice (first at line " +
                                                 std::to_string(cycles_line) + ")",
                         line.number, 1);
      }
      profile.cycles = detail::parse_unsigned(line, line.tokens[1], "cycle count");
      if (profile.cycles == 0) {
        throw ParseError("empty-trace", "cycle count must be positive", line.number, line.tokens[1].column);
      }
      cycles_line = line.number;
    } else if (directive == "rule") {
      detail::expect_arity(line, 4, "rule <rule_id> block <block_label>");
      std::string rule = detail::expect_id(line, line.tokens[1], "rule id");
      if (line.tokens[2].text != "block") {
        throw ParseError("lexical", "expected 'block', found '" + std::string(line.tokens[2].text) + "'",
                         line.number, line.tokens[2].column);
      }
      BlockLabel label = detail::expect_label(line, line.tokens[3]);
      if (!profile.rule_block.emplace(rule, std::move(label)).second) {
        throw ParseError("duplicate-rule", "rule '" + rule + "' declared twice", line.number,
                         line.tokens[1].column);
      }
    } else if (directive == "fires") {
      detail::expect_arity(line, 3, "fires <rule_id> <c1,c2,...>");
      std::string rule = detail::expect_id(line, line.tokens[1], "rule id");
      rule_refs.push_back({line.number, line.tokens[1].column, rule});
      std::vector<Cycle> cycles;
      const std::string_view list = line.tokens[2].text;
      std::size_t start = 0;
      while (true) {
        const std::size_t comma = list.find(',', start);
        const std::string_view item = list.substr(start, comma == list.npos ? list.npos : comma - start);
        const Token item_token{item, line.tokens[2].column + start};
        const Cycle c = detail::parse_unsigned(line, item_token, "cycle");
        if (!cycles.empty() && c <= cycles.back()) {
          throw ParseError("unsorted-firings",
                           "firing cycles must be strictly increasing, found " + std::to_string(c) +
                               " after " + std::to_string(cycles.back()),
                           line.number, item_token.column);
        }
        cycles.push_back(c);
        cycle_refs.push_back({{line.number, item_token.column, rule}, c});
        if (comma == list.npos) break;
        start = comma + 1;
      }
      if (!profile.firings.emplace(rule, std::move(cycles)).second) {
        throw ParseError("duplicate-fires", "firings of rule '" + rule + "' listed twice", line.number,
                         line.tokens[1].column);
      }
    } else if (directive == "writes") {
      detail::expect_arity(line, 3, "writes <rule_id> <state_id>");
      std::string rule = detail::expect_id(line, line.tokens[1], "rule id");
      std::string state = detail::expect_id(line, line.tokens[2], "state id");
      rule_refs.push_back({line.number, line.tokens[1].column, rule});
      profile.writes.emplace(std::move(rule), std::move(state));
    } else if (directive == "reads") {
      detail::expect_arity(line, 3, "reads <block_label> <state_id>");
      BlockLabel label = detail::expect_label(line, line.tokens[1]);
      std::string state = detail::expect_id(line, line.tokens[2], "state id");
      block_refs.push_back({{line.number, line.tokens[1].column, label.str()}, label});
      state_refs.push_back({line.number, line.tokens[2].column, state});
      profile.reads.emplace(std::move(label), std::move(state));
    } else {
      throw ParseError("unknown-directive", "unknown directive '" + std::string(directive) + "'",
                       line.number, line.tokens.front().column);
    }
  }

  if (!cycles_line) {
    throw ParseError("missing-cycles", "profile has no 'cycles' line",
                     lines.empty() ? 1 : lines.back().number);
  }
  for (const auto& [ref, c] : cycle_refs) {
    if (c >= profile.cycles) {
      throw ParseError("cycle-out-of-range",
                       "cycle " + std::to_string(c) + " out of range (cycles " +
                           std::to_string(profile.cycles) + ")",
                       ref.line, ref.column);
    }
  }
  for (const Reference& ref : rule_refs) {
    if (!profile.rule_block.count(ref.name)) {
      throw ParseError("undeclared-rule", "reference to undeclared rule '" + ref.name + "'", ref.line,
                       ref.column);
    }
  }
  std::set<BlockLabel> blocks;
  for (const auto& [rule, label] : profile.rule_block) blocks.insert(label);
  for (const auto& [ref, label] : block_refs) {
    if (!blocks.count(label)) {
      throw ParseError("undeclared-block", "reference to undeclared block '" + ref.name + "'", ref.line,
                       ref.column);
    }
  }
  std::set<std::string> states;
  for (const auto& [rule, state] : profile.writes) states.insert(state);
  for (const Reference& ref : state_refs) {
    if (!states.count(ref.name)) {
      throw ParseError("undeclared-state",
                       "reference to undeclared state '" + ref.name + "' (no rule writes it)", ref.line,
                       ref.column);
    }
  }
  return profile;
}

inline std::string serialize_profile(const ActivityProfile& profile) {
  std::ostringstream out;
  out << kProfileMagic << ' ' << kFormatVersion << '\n';
  out << "cycles " << profile.cycles << '\n';
  for (const auto& [rule, label] : profile.rule_block) out << "rule " << rule << " block " << label.str() << '\n';
  for (const auto& [rule, cycles] : profile.firings) {
    if (cycles.empty()) continue;
    out << "fires " << rule << ' ';
    for (std::size_t i = 0; i < cycles.size(); ++i) out << (i ? "," : "") << cycles[i];
    out << '\n';
  }
  for (const auto& [rule, state] : profile.writes) out << "writes " << rule << ' ' << state << '\n';
  for (const auto& [label, state] : profile.reads) out << "reads " << label.str() << ' ' << state << '\n';
  return out.str();
}

}  // namespace blockscope

#endif  // BLOCKSCOPE_NETLIST_IO_HPP
