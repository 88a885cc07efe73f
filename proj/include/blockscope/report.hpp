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

// Report renderers. All three are pure and byte-stable. Number formats are
// shared: delays are integer ps, power values and areas carry three
// decimals, switching factors four.
//
// The structured (JSON) document is the stable interface; see
// docs/report-schema.md. Object keys are emitted in sorted order.

#ifndef BLOCKSCOPE_REPORT_HPP
#define BLOCKSCOPE_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "blockscope/annotation.hpp"
#include "blockscope/area.hpp"
#include "blockscope/delay.hpp"
#include "blockscope/power.hpp"

namespace blockscope {

inline constexpr std::string_view kReportSchema = "blockscope-report v1";

struct ReportMetadata {
  std::string tool_version = std::string(kToolVersion);
  std::map<std::string, std::string> inputs;  // role -> digest
  std::string device;
  std::optional<std::size_t> group_depth;
  std::string block_delay_mode = "with-intra-block-nets";
  std::size_t cell_count = 0;

  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

struct CombinedReport {
  ReportMetadata metadata;
  std::optional<AreaReport> area;
  std::optional<DelayReport> delay;
  std::optional<PowerScore> power;

  friend bool operator==(const CombinedReport&, const CombinedReport&) = default;
};

/// 64-bit FNV-1a digest of `bytes`, rendered as "fnv1a64:<16 hex digits>".
inline std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string format_fixed(double value, int decimals) {
  if (value == 0.0) value = 0.0;  // no "-0.000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

inline std::string format_power(double uw) { return format_fixed(uw, 3); }
inline std::string format_alpha(double alpha) { return format_fixed(alpha, 4); }

namespace detail {

// One output row per block plus the pseudo-block; the latter is shown
// whenever the netlist has cells.
inline std::vector<std::string> row_names(const CombinedReport& report) {
  std::set<BlockLabel> labels;
  if (report.area) {
    for (const auto& [label, e] : report.area->per_block) labels.insert(label);
  }
  if (report.delay) {
    for (const auto& [label, e] : report.delay->per_block) labels.insert(label);
  }
  if (report.power) {
    for (const auto& [label, e] : report.power->per_block) labels.insert(label);
  }
  std::vector<std::string> names;
  for (const BlockLabel& label : labels) names.push_back(label.str());
  if (report.metadata.cell_count > 0) names.emplace_back(kUnannotatedName);
  return names;
}

template <typename Entry>
const Entry* lookup_row(const std::map<BlockLabel, Entry>& per_block, const Entry* unannotated,
                        const std::string& name) {
  if (name == kUnannotatedName) return unannotated;
  const auto it = per_block.find(BlockLabel::parse(name));
  return it == per_block.end() ? nullptr : &it->second;
}

inline std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

inline std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace detail

/// Human-readable fixed-width tables. Blocks on the global critical path
/// carry `*` in the delay table.
inline std::string render_text(const CombinedReport& report) {
  std::ostringstream out;
  const ReportMetadata& meta = report.metadata;
  const std::vector<std::string> rows = detail::row_names(report);
  std::size_t name_width = 13;
  for (const std::string& name : rows) name_width = std::max(name_width, name.size());
  const auto name_col = [&](const std::string& s) { return detail::pad_right(s, name_width); };
  const auto num = [](const std::string& s, std::size_t w) { return " " + detail::pad_left(s, w); };

  out << "blockscope " << meta.tool_version << " -- " << kReportSchema << '\n';
  out << "device: " << (meta.device.empty() ? "-" : meta.device)
      << "  group depth: " << (meta.group_depth ? std::to_string(*meta.group_depth) : "-")
      << "  block delay: " << meta.block_delay_mode << "  cells: " << meta.cell_count << '\n';
  for (const auto& [role, value] : meta.inputs) out << "input " << role << ": " << value << '\n';

  if (report.area) {
    const AreaReport& area = *report.area;
    out << "\nAREA\n" << name_col("block");
    for (ResourceKind k : kAllResourceKinds) out << num(std::string(to_string(k)), 6);
    out << num("unpaired", 8) << num("cells", 6) << num("weighted", 12) << '\n';
    const auto line = [&](const std::string& name, const AreaEntry& e) {
      out << name_col(name);
      for (ResourceKind k : kAllResourceKinds) out << num(std::to_string(e.counts[k]), 6);
      out << num(std::to_string(e.counts.unpaired_ff_ports), 8) << num(std::to_string(e.cells), 6)
          << num(format_fixed(e.weighted_area, 3), 12) << '\n';
    };
    for (const std::string& name : rows) {
      const AreaEntry* e = detail::lookup_row(area.per_block, &area.unannotated, name);
      line(name, e ? *e : AreaEntry{});
    }
    line("TOTAL", area.totals);
  }

  if (report.delay) {
    const DelayReport& delay = *report.delay;
    out << "\nDELAY (ps)\n"
        << name_col("block") << num("crit", 4) << num("sys.total", 10) << num("sys.logic", 10)
        << num("sys.net", 10) << num("blk.total", 10) << num("blk.logic", 10) << num("blk.net", 10)
        << num("sets", 8) << '\n';
    const BlockDelays* unannotated = delay.unannotated ? &*delay.unannotated : nullptr;
    for (const std::string& name : rows) {
      const BlockDelays* d = detail::lookup_row(delay.per_block, unannotated, name);
      const BlockDelays empty;
      const BlockDelays& e = d ? *d : empty;
      const bool critical = name != kUnannotatedName && delay.critical_blocks.count(BlockLabel::parse(name));
      std::vector<std::string> sizes;
      for (std::size_t s : e.set_sizes) sizes.push_back(std::to_string(s));
      out << name_col(name) << num(critical ? "*" : "", 4) << num(std::to_string(e.system.total_delay), 10)
          << num(std::to_string(e.system.logic_delay), 10) << num(std::to_string(e.system.network_delay), 10)
          << num(std::to_string(e.block.total_delay), 10) << num(std::to_string(e.block.logic_delay), 10)
          << num(std::to_string(e.block.network_delay), 10)
          << num(sizes.empty() ? "-" : detail::join(sizes, "/"), 8) << '\n';
    }
    const PathResult& g = delay.global_critical;
    out << name_col("CRITICAL") << num("", 4) << num(std::to_string(g.total_delay), 10)
        << num(std::to_string(g.logic_delay), 10) << num(std::to_string(g.network_delay), 10) << '\n';
    std::vector<std::string> blocks;
    for (const BlockLabel& b : delay.critical_blocks) blocks.push_back(b.str());
    out << "critical blocks: " << (blocks.empty() ? "-" : detail::join(blocks, ", ")) << '\n';
    out << "critical path: " << (g.path.empty() ? "-" : detail::join(g.path, " -> ")) << '\n';
  }

  if (report.power) {
    const PowerScore& power = *report.power;
    out << "\nPOWER SCORE (f = " << format_fixed(power.frequency_hz, 3) << " Hz)\n";
    out << "note: " << kRelativeScoreBanner << '\n';
    out << name_col("block") << num("static_uW", 12) << num("dynamic_pJ", 12) << num("alpha", 8)
        << num("active", 7) << num("events", 7) << num("P_avg_uW", 14) << num("rank", 5) << '\n';
    std::map<std::string, std::size_t> rank;
    for (std::size_t i = 0; i < power.ranking.size(); ++i) rank[power.ranking[i].str()] = i + 1;
    double total_static = 0.0, total_dynamic = 0.0, total_avg = 0.0;
    for (const std::string& name : rows) {
      const PowerEntry* p = detail::lookup_row(power.per_block, &power.unannotated, name);
      const PowerEntry e = p ? *p : PowerEntry{};
      total_static += e.static_uw;
      total_dynamic += e.dynamic_pj;
      total_avg += e.average_uw;
      const auto r = rank.find(name);
      out << name_col(name) << num(format_power(e.static_uw), 12) << num(format_fixed(e.dynamic_pj, 3), 12)
          << num(format_alpha(e.alpha()), 8) << num(std::to_string(e.activity.active_cycles), 7)
          << num(std::to_string(e.activity.events), 7) << num(format_power(e.average_uw), 14)
          << num(r == rank.end() ? "-" : std::to_string(r->second), 5)
          << (p && !p->activity.in_profile && name != kUnannotatedName ? "  (not in profile)" : "") << '\n';
    }
    out << name_col("TOTAL") << num(format_power(total_static), 12) << num(format_fixed(total_dynamic, 3), 12)
        << num("", 8) << num("", 7) << num("", 7) << num(format_power(total_avg), 14) << '\n';
  }
  return out.str();
}

inline constexpr std::string_view kCsvHeader =
    "metric,block,critical,LUT1,LUT2,LUT3,LUT4,LUT5,LUT6,FF,CLK,IN,OUT,MEM_IN,unpaired_ff_ports,cells,"
    "weighted_area,system_total_ps,system_logic_ps,system_network_ps,block_total_ps,block_logic_ps,"
    "block_network_ps,static_uw,dynamic_pj,alpha,active_cycles,cycles,events,average_uw";

/// RFC 4180 quoting, applied only when the field needs it.
inline std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

/// One row per block per metric family, in a single table whose columns
/// are the union of all families; inapplicable cells are empty.
inline std::string render_csv(const CombinedReport& report) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  if (report.metadata.cell_count == 0) return out.str();
  const std::vector<std::string> rows = detail::row_names(report);
  constexpr std::size_t kColumns = 30;
  const auto emit = [&](std::vector<std::string> fields) {
    fields.resize(kColumns);
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
    out << '\n';
  };

  if (report.area) {
    for (const std::string& name : rows) {
      const AreaEntry* p = detail::lookup_row(report.area->per_block, &report.area->unannotated, name);
      const AreaEntry e = p ? *p : AreaEntry{};
      std::vector<std::string> f = {"area", name, ""};
      for (ResourceKind k : kAllResourceKinds) f.push_back(std::to_string(e.counts[k]));
      f.push_back(std::to_string(e.counts.unpaired_ff_ports));
      f.push_back(std::to_string(e.cells));
      f.push_back(format_fixed(e.weighted_area, 3));
      emit(std::move(f));
    }
  }
  if (report.delay) {
    const DelayReport& delay = *report.delay;
    const BlockDelays* unannotated = delay.unannotated ? &*delay.unannotated : nullptr;
    for (const std::string& name : rows) {
      const BlockDelays* p = detail::lookup_row(delay.per_block, unannotated, name);
      const BlockDelays e = p ? *p : BlockDelays{};
      const bool critical = name != kUnannotatedName && delay.critical_blocks.count(BlockLabel::parse(name));
      std::vector<std::string> f = {"delay", name, critical ? "1" : "0"};
      f.resize(17);
      for (Picoseconds v : {e.system.total_delay, e.system.logic_delay, e.system.network_delay,
                            e.block.total_delay, e.block.logic_delay, e.block.network_delay}) {
        f.push_back(std::to_string(v));
      }
      emit(std::move(f));
    }
  }
  if (report.power) {
    for (const std::string& name : rows) {
      const PowerEntry* p = detail::lookup_row(report.power->per_block, &report.power->unannotated, name);
      const PowerEntry e = p ? *p : PowerEntry{};
      std::vector<std::string> f = {"power", name, ""};
      f.resize(23);
      f.push_back(format_power(e.static_uw));
      f.push_back(format_fixed(e.dynamic_pj, 3));
      f.push_back(format_alpha(e.alpha()));
      f.push_back(std::to_string(e.activity.active_cycles));
      f.push_back(std::to_string(e.activity.cycles));
      f.push_back(std::to_string(e.activity.events));
      f.push_back(format_power(e.average_uw));
      emit(std::move(f));
    }
  }
  return out.str();
}

namespace detail {

// Fixed-decimal numbers are carried through nlohmann::json as strings
// tagged with this prefix and written unquoted by dump_canonical.
inline constexpr char kRawNumberTag = '\x01';

inline nlohmann::json fixed_json(double value, int decimals) {
  return std::string(1, kRawNumberTag) + format_fixed(value, decimals);
}

inline void dump_canonical(const nlohmann::json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {  // nlohmann::json objects iterate in sorted key order
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + nlohmann::json(key).dump() + ": ";
      dump_canonical(value, out, indent + 2);
    }
    out += "\n" + close + "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      dump_canonical(j[i], out, indent + 2);
    }
    out += "\n" + close + "]";
  } else if (j.is_string() && !j.get_ref<const std::string&>().empty() &&
             j.get_ref<const std::string&>().front() == kRawNumberTag) {
    out += j.get_ref<const std::string&>().substr(1);
  } else {
    out += j.dump();
  }
}

inline nlohmann::json path_json(const PathResult& p) {
  return {{"logic_ps", p.logic_delay},
          {"network_ps", p.network_delay},
          {"path", p.path},
          {"total_ps", p.total_delay}};
}

inline nlohmann::json area_json(const AreaEntry& e) {
  nlohmann::json counts = nlohmann::json::object();
  for (ResourceKind k : kAllResourceKinds) counts[std::string(to_string(k))] = e.counts[k];
  return {{"cells", e.cells},
          {"counts", counts},
          {"unpaired_ff_ports", e.counts.unpaired_ff_ports},
          {"weighted_area", fixed_json(e.weighted_area, 3)}};
}

inline nlohmann::json delay_json(const BlockDelays& d, bool critical) {
  return {{"block", path_json(d.block)},
          {"connected_sets", d.set_sizes},
          {"critical", critical},
          {"system", path_json(d.system)}};
}

inline nlohmann::json power_json(const PowerEntry& e) {
  return {{"active_cycles", e.activity.active_cycles},
          {"alpha", fixed_json(e.alpha(), 4)},
          {"average_uw", fixed_json(e.average_uw, 3)},
          {"cycles", e.activity.cycles},
          {"dynamic_pj", fixed_json(e.dynamic_pj, 3)},
          {"events", e.activity.events},
          {"in_profile", e.activity.in_profile},
          {"static_uw", fixed_json(e.static_uw, 3)}};
}

}  // namespace detail

/// Canonical JSON document.
inline std::string render_structured(const CombinedReport& report) {
  using nlohmann::json;
  const ReportMetadata& meta = report.metadata;
  json doc = json::object();
  doc["schema"] = kReportSchema;
  doc["metadata"] = {{"block_delay_mode", meta.block_delay_mode},
                     {"cell_count", meta.cell_count},
                     {"device", meta.device},
                     {"group_depth", meta.group_depth ? json(*meta.group_depth) : json(nullptr)},
                     {"inputs", meta.inputs},
                     {"tool_version", meta.tool_version}};

  if (report.area) {
    json blocks = json::object();
    for (const auto& [label, e] : report.area->per_block) blocks[label.str()] = detail::area_json(e);
    doc["area"] = {{"blocks", blocks},
                   {"totals", detail::area_json(report.area->totals)},
                   {"unannotated", detail::area_json(report.area->unannotated)}};
  }
  if (report.delay) {
    const DelayReport& delay = *report.delay;
    json blocks = json::object();
    for (const auto& [label, d] : delay.per_block) {
      blocks[label.str()] = detail::delay_json(d, delay.critical_blocks.count(label) != 0);
    }
    json critical = json::array();
    for (const BlockLabel& b : delay.critical_blocks) critical.push_back(b.str());
    doc["delay"] = {{"blocks", blocks},
                    {"critical_blocks", critical},
                    {"global_critical", detail::path_json(delay.global_critical)},
                    {"unannotated", delay.unannotated ? detail::delay_json(*delay.unannotated, false) : json(nullptr)}};
  }
  if (report.power) {
    const PowerScore& power = *report.power;
    json blocks = json::object();
    for (const auto& [label, e] : power.per_block) blocks[label.str()] = detail::power_json(e);
    json ranking = json::array();
    for (const BlockLabel& b : power.ranking) ranking.push_back(b.str());
    doc["power"] = {{"banner", kRelativeScoreBanner},
                    {"blocks", blocks},
                    {"frequency_hz", detail::fixed_json(power.frequency_hz, 3)},
                    {"ranking", ranking},
                    {"unannotated", detail::power_json(power.unannotated)}};
  }

  std::string out;
  detail::dump_canonical(doc, out, 0);
  out += '\n';
  return out;
}

namespace detail {

inline PathResult path_from_json(const nlohmann::json& j) {
  PathResult p;
  p.logic_delay = j.at("logic_ps").get<Picoseconds>();
  p.network_delay = j.at("network_ps").get<Picoseconds>();
  p.total_delay = j.at("total_ps").get<Picoseconds>();
  p.path = j.at("path").get<std::vector<std::string>>();
  return p;
}

inline AreaEntry area_from_json(const nlohmann::json& j) {
  AreaEntry e;
  e.cells = j.at("cells").get<std::size_t>();
  for (ResourceKind k : kAllResourceKinds) e.counts[k] = j.at("counts").at(std::string(to_string(k))).get<std::size_t>();
  e.counts.unpaired_ff_ports = j.at("unpaired_ff_ports").get<std::size_t>();
  e.weighted_area = j.at("weighted_area").get<double>();
  return e;
}

inline BlockDelays delay_from_json(const nlohmann::json& j) {
  BlockDelays d;
  d.system = path_from_json(j.at("system"));
  d.block = path_from_json(j.at("block"));
  d.set_sizes = j.at("connected_sets").get<std::vector<std::size_t>>();
  return d;
}

inline PowerEntry power_from_json(const nlohmann::json& j) {
  PowerEntry e;
  e.static_uw = j.at("static_uw").get<double>();
  e.dynamic_pj = j.at("dynamic_pj").get<double>();
  e.average_uw = j.at("average_uw").get<double>();
  e.activity.active_cycles = j.at("active_cycles").get<std::uint64_t>();
  e.activity.cycles = j.at("cycles").get<Cycle>();
  e.activity.events = j.at("events").get<std::uint64_t>();
  e.activity.in_profile = j.at("in_profile").get<bool>();
  return e;
}

}  // namespace detail

/// Reads a document produced by render_structured. Values come back at the
/// rendered precision.
inline CombinedReport parse_structured(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("structured-parse", std::string("malformed report document: ") + e.what());
  }
  try {
    if (doc.at("schema").get<std::string>() != kReportSchema) {
      throw Error("version-mismatch", "unsupported report schema '" + doc.at("schema").get<std::string>() + "'");
    }
    CombinedReport report;
    const json& meta = doc.at("metadata");
    report.metadata.block_delay_mode = meta.at("block_delay_mode").get<std::string>();
    report.metadata.cell_count = meta.at("cell_count").get<std::size_t>();
    report.metadata.device = meta.at("device").get<std::string>();
    if (!meta.at("group_depth").is_null()) report.metadata.group_depth = meta.at("group_depth").get<std::size_t>();
    report.metadata.inputs = meta.at("inputs").get<std::map<std::string, std::string>>();
    report.metadata.tool_version = meta.at("tool_version").get<std::string>();

    if (doc.contains("area")) {
      AreaReport area;
      for (const auto& [label, e] : doc["area"].at("blocks").items()) {
        area.per_block.emplace(BlockLabel::parse(label), detail::area_from_json(e));
      }
      area.totals = detail::area_from_json(doc["area"].at("totals"));
      area.unannotated = detail::area_from_json(doc["area"].at("unannotated"));
      report.area = std::move(area);
    }
    if (doc.contains("delay")) {
      DelayReport delay;
      for (const auto& [label, d] : doc["delay"].at("blocks").items()) {
        delay.per_block.emplace(BlockLabel::parse(label), detail::delay_from_json(d));
      }
      for (const auto& b : doc["delay"].at("critical_blocks")) delay.critical_blocks.insert(BlockLabel::parse(b.get<std::string>()));
      delay.global_critical = detail::path_from_json(doc["delay"].at("global_critical"));
      if (!doc["delay"].at("unannotated").is_null()) {
        delay.unannotated = detail::delay_from_json(doc["delay"]["unannotated"]);
      }
      report.delay = std::move(delay);
    }
    if (doc.contains("power")) {
      PowerScore power;
      for (const auto& [label, e] : doc["power"].at("blocks").items()) {
        power.per_block.emplace(BlockLabel::parse(label), detail::power_from_json(e));
      }
      for (const auto& b : doc["power"].at("ranking")) power.ranking.push_back(BlockLabel::parse(b.get<std::string>()));
      power.frequency_hz = doc["power"].at("frequency_hz").get<double>();
      power.unannotated = detail::power_from_json(doc["power"].at("unannotated"));
      report.power = std::move(power);
    }
    return report;
  } catch (const json::exception& e) {
    throw Error("structured-parse", std::string("report document does not match schema: ") + e.what());
  }
}

}  // namespace blockscope

#endif  // BLOCKSCOPE_REPORT_HPP
