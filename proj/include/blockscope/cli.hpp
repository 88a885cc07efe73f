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

// Orchestration behind the `blockscope` command: parse, annotate, analyze,
// render.

#ifndef BLOCKSCOPE_CLI_HPP
#define BLOCKSCOPE_CLI_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "blockscope/annotation.hpp"
#include "blockscope/area.hpp"
#include "blockscope/delay.hpp"
#include "blockscope/device.hpp"
#include "blockscope/fixtures.hpp"
#include "blockscope/graph.hpp"
#include "blockscope/netlist_io.hpp"
#include "blockscope/parallel.hpp"
#include "blockscope/power.hpp"
#include "blockscope/report.hpp"

namespace blockscope {

enum class Metric { Area, Delay, Power };
enum class OutputFormat { Text, Csv, Structured };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

inline constexpr int kDefaultGcdWidth = 4;

inline std::optional<Metric> parse_metric(std::string_view s) {
  if (s == "area") return Metric::Area;
  if (s == "delay") return Metric::Delay;
  if (s == "power") return Metric::Power;
  return std::nullopt;
}

inline std::optional<OutputFormat> parse_output_format(std::string_view s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "structured" || s == "json") return OutputFormat::Structured;
  return std::nullopt;
}

struct RunConfig {
  std::string netlist_path;
  std::optional<std::string> profile_path;
  std::optional<std::string> power_model_path;
  /// Built-in profile name or a path to a device profile file.
  std::string device = "spartan6";
  /// Empty selects area and delay, plus power when a profile is given.
  std::set<Metric> metrics;
  std::optional<std::size_t> group_depth;
  OutputFormat format = OutputFormat::Text;
  bool block_delay_nodes_only = false;
  bool override_delays = false;
  /// 0 reads BLOCKSCOPE_THREADS.
  unsigned threads = 0;
};

namespace detail {

/// An input error tied to a file. `rule` and position come from the
/// underlying Error when there is one.
class InputError : public Error {
 public:
  InputError(const std::string& path, const Error& cause)
      : Error(cause.rule(), path + ": " + cause.rule() + ": " + cause.what(), cause.line(), cause.column()) {}
  InputError(const std::string& path, std::string rule, const std::string& message)
      : Error(rule, path + ": " + rule + ": " + message) {}
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "unreadable-file", "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename Fn>
auto parse_file(const std::string& path, const std::string& text, Fn&& parse) {
  try {
    return parse(text);
  } catch (const Error& e) {
    throw InputError(path, e);
  }
}

}  // namespace detail

/// Builds the report for `config`. Throws Error on bad input.
inline CombinedReport build_report(const RunConfig& config) {
  std::set<Metric> metrics = config.metrics;
  if (metrics.empty()) {
    metrics = {Metric::Area, Metric::Delay};
    if (config.profile_path) metrics.insert(Metric::Power);
  }
  if (metrics.count(Metric::Power) && !config.profile_path) {
    throw Error("missing-profile", "power metric requires --profile");
  }
  if (config.group_depth && *config.group_depth < 1) {
    throw Error("invalid-depth", "--group-depth must be at least 1");
  }

  CombinedReport report;
  ReportMetadata& meta = report.metadata;
  meta.block_delay_mode = config.block_delay_nodes_only ? "nodes-only" : "with-intra-block-nets";
  meta.group_depth = config.group_depth;

  DeviceProfile device;
  if (const auto builtin = find_builtin_device(config.device)) {
    device = *builtin;
  } else {
    if (!std::filesystem::exists(config.device)) {
      throw Error("unknown-device", "unknown device '" + config.device +
                                        "' (expected spartan6, virtex5, virtex7 or a device profile path)");
    }
    const std::string text = detail::read_file(config.device);
    device = detail::parse_file(config.device, text, parse_device_profile);
    meta.inputs["device"] = digest(text);
  }
  meta.device = device.name;

  const std::string netlist_text = detail::read_file(config.netlist_path);
  meta.inputs["netlist"] = digest(netlist_text);
  Netlist netlist = detail::parse_file(config.netlist_path, netlist_text, parse_netlist).body;
  if (config.override_delays) netlist = apply_device_delays(std::move(netlist), device);
  meta.cell_count = netlist.cells.size();

  BlockRegistry registry = build_registry(netlist);
  if (config.group_depth) registry = group_to_depth(registry, *config.group_depth);

  if (metrics.count(Metric::Area)) report.area = area_report(netlist, registry, device.weights);
  if (metrics.count(Metric::Delay)) {
    const TimingGraph graph(netlist);
    DelayOptions options;
    options.block_nets = !config.block_delay_nodes_only;
    options.threads = config.threads ? config.threads : threads_from_environment();
    report.delay = delay_report(graph, registry, options);
  }
  if (metrics.count(Metric::Power)) {
    const std::string profile_text = detail::read_file(*config.profile_path);
    meta.inputs["profile"] = digest(profile_text);
    const ActivityProfile profile = detail::parse_file(*config.profile_path, profile_text, parse_profile);
    PowerModel model = PowerModel::defaults();
    if (config.power_model_path) {
      const std::string model_text = detail::read_file(*config.power_model_path);
      meta.inputs["power_model"] = digest(model_text);
      model = detail::parse_file(*config.power_model_path, model_text, parse_power_model);
    }
    report.power = power_score(netlist, registry, model, profile, config.group_depth);
  }
  return report;
}

inline std::string render(const CombinedReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: return render_csv(report);
    case OutputFormat::Structured: return render_structured(report);
    case OutputFormat::Text: break;
  }
  return render_text(report);
}

/// Runs one analysis. The report goes to `out` only on success.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    out << render(build_report(config), config.format);
    out.flush();
    return kExitOk;
  } catch (const Error& e) {
    err << "blockscope: error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "blockscope: internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
}

/// Writes the named fixture into `out_dir`: gcd (gcd.bnl, gcd.bpf), fig6
/// (fig6.bnl) or random:<seed>:<n> (random_<seed>_<n>.bnl).
inline int run_fixtures(const std::string& name, const std::string& out_dir, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  try {
    std::vector<std::pair<std::string, std::string>> files;
    if (name == "gcd") {
      const GcdFixture gcd = gen_gcd(kDefaultGcdWidth);
      files = {{"gcd.bnl", serialize_netlist(gcd.netlist)}, {"gcd.bpf", serialize_profile(gcd.profile)}};
    } else if (name == "fig6") {
      files = {{"fig6.bnl", serialize_netlist(gen_fig6())}};
    } else if (name.rfind("random:", 0) == 0) {
      const std::string rest = name.substr(7);
      const auto colon = rest.find(':');
      std::uint64_t seed = 0;
      std::size_t n = 0;
      try {
        if (colon == std::string::npos) throw std::invalid_argument("missing size");
        std::size_t used = 0;
        seed = std::stoull(rest.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("seed");
        n = std::stoull(rest.substr(colon + 1), &used);
        if (used != rest.size() - colon - 1 || rest[0] == '-' || rest[colon + 1] == '-') {
          throw std::invalid_argument("size");
        }
      } catch (const std::logic_error&) {
        throw Error("unknown-fixture", "malformed fixture name '" + name + "' (expected random:<seed>:<n>)");
      }
      files = {{"random_" + std::to_string(seed) + "_" + std::to_string(n) + ".bnl",
                serialize_netlist(gen_random(seed, n))}};
    } else {
      throw Error("unknown-fixture", "unknown fixture '" + name + "' (expected gcd, fig6 or random:<seed>:<n>)");
    }

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw Error("unwritable-output", out_dir + ": cannot create directory: " + ec.message());
    for (const auto& [file, contents] : files) {
      const fs::path path = fs::path(out_dir) / file;
      std::ofstream f(path, std::ios::binary);
      f << contents;
      if (!f) throw Error("unwritable-output", path.string() + ": cannot write file");
      out << path.string() << '\n';
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "blockscope: error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "blockscope: internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
}

}  // namespace blockscope

#endif  // BLOCKSCOPE_CLI_HPP
