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

// Acceptance suite: one PASS/FAIL line per headline criterion. Exit status
// is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blockscope.hpp"

#ifndef BLOCKSCOPE_CLI_PATH
#error "BLOCKSCOPE_CLI_PATH must name the blockscope executable"
#endif

namespace {

using namespace blockscope;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kInstances = 1000;

// Golden subtract block delays (ps) for the GCD fixture on spartan6,
// virtex5 and virtex7, frozen from oracle_longest_path.
const std::vector<Picoseconds> kGcdSubtractBlockDelay = {1034, 414, 206};

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string str(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "}";
}

std::vector<CellIndex> indices(const TimingGraph& g, const std::vector<std::string>& ids) {
  std::vector<CellIndex> out;
  for (const std::string& id : ids) out.push_back(*g.find(id));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t random_size(std::uint64_t seed) { return 2 + (seed * 7919) % 150; }

Outcome fig6_reproduction() {
  Outcome o;
  const Netlist n = gen_fig6();
  const TimingGraph g(n);
  const BlockRegistry r = build_registry(n);
  const BlockDelays d = delay_report(g, r).per_block.at(BlockLabel::parse("blk"));
  if (d.system.total_delay != 5) o.fail("system delay " + std::to_string(d.system.total_delay));
  if (d.block.total_delay != 3) o.fail("block delay " + std::to_string(d.block.total_delay));
  if (d.set_sizes != std::vector<std::size_t>{7, 5}) o.fail("connected sets " + str(d.set_sizes));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t comparisons = 0;
  for (std::uint64_t seed = 0; seed < kInstances && o.ok; ++seed) {
    const Netlist n = gen_random(seed, 2 + seed % 11);
    const TimingGraph g(n);
    const BlockRegistry r = build_registry(n);
    std::vector<std::vector<std::string>> groups;
    for (const auto& [label, ids] : r.blocks()) groups.push_back(ids);
    for (const auto& ids : groups) {
      const std::set<std::string> block(ids.begin(), ids.end());
      const BlockDelays d = analyze_block(g, indices(g, ids));
      comparisons += 2;
      if (d.system != oracle_longest_path(n, block, WeightingMode::SystemDelay)) {
        o.fail("system delay disagrees, seed " + std::to_string(seed));
      }
      if (d.block != oracle_longest_path(n, block, WeightingMode::BlockDelay)) {
        o.fail("block delay disagrees, seed " + std::to_string(seed));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(comparisons) + " comparisons";
  return o;
}

Outcome area_conservation() {
  Outcome o;
  std::vector<Netlist> netlists = {gen_fig6()};
  for (int w = 1; w <= 8; ++w) netlists.push_back(gen_gcd(w).netlist);
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) netlists.push_back(gen_random(seed, random_size(seed)));
  for (const Netlist& n : netlists) {
    const AreaReport a = area_report(n, build_registry(n));
    ResourceCounts sum = a.unannotated.counts;
    for (const auto& [label, e] : a.per_block) sum += e.counts;
    if (sum != resource_census(n)) o.fail("census mismatch on a " + std::to_string(n.cells.size()) + "-cell netlist");
  }
  return o;
}

Outcome delay_invariants() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < kInstances && o.ok; ++seed) {
    const Netlist n = gen_random(seed, random_size(seed));
    const DelayReport r = delay_report(TimingGraph(n), build_registry(n));
    Picoseconds max_system = 0;
    for (const auto& [label, d] : r.per_block) {
      if (d.block.total_delay > d.system.total_delay) o.fail("block > system, seed " + std::to_string(seed));
      max_system = std::max(max_system, d.system.total_delay);
    }
    if (max_system > r.global_critical.total_delay) o.fail("block system > global, seed " + std::to_string(seed));
    if (!r.critical_blocks.empty() && max_system != r.global_critical.total_delay) {
      o.fail("critical path touches a block but max system delay differs, seed " + std::to_string(seed));
    }
  }
  return o;
}

Outcome switching_factor_replay() {
  Outcome o;
  const BlockActivity sub = switching_factor(BlockLabel::parse("subtract"), gen_gcd(kDefaultGcdWidth).profile);
  if (format_alpha(sub.alpha()) != "0.5000") o.fail("alpha(subtract) = " + format_alpha(sub.alpha()));
  const std::vector<BlockLabel> blocks = {BlockLabel::parse("alu"), BlockLabel::parse("ctl"),
                                          BlockLabel::parse("io"), BlockLabel::parse("mem.rd")};
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    const ActivityProfile p = gen_random_profile(seed, blocks);
    for (const auto& [label, active] : oracle_replay(p)) {
      const BlockActivity a = switching_factor(label, p);
      if (a.active_cycles != active.size()) o.fail("replay disagrees, seed " + std::to_string(seed));
      if (a.alpha() < 0.0 || a.alpha() > 1.0) o.fail("alpha out of [0,1], seed " + std::to_string(seed));
    }
  }
  return o;
}

Outcome power_arithmetic() {
  Outcome o;
  const std::string p = format_power(average_power_uw(2.0, 10.0, 0.3, 100e6));
  if (p != "302.000") o.fail("P_avg = " + p);
  return o;
}

Outcome device_scaling() {
  Outcome o;
  std::vector<Picoseconds> got;
  for (const DeviceProfile& device : builtin_devices()) {
    const Netlist n = gen_gcd(kDefaultGcdWidth, device).netlist;
    const BlockRegistry r = build_registry(n);
    const Picoseconds d =
        delay_report(TimingGraph(n), r).per_block.at(BlockLabel::parse("subtract")).block.total_delay;
    const auto& cells = r.cells(BlockLabel::parse("subtract"));
    const Picoseconds oracle =
        oracle_longest_path(n, {cells.begin(), cells.end()}, WeightingMode::BlockDelay, true, n.cells.size())
            .total_delay;
    if (d != oracle) o.fail(device.name + ": implementation " + std::to_string(d) + " vs oracle " + std::to_string(oracle));
    got.push_back(d);
  }
  if (got != kGcdSubtractBlockDelay) o.fail("block delays differ from golden values");
  if (!(got[0] > got[1] && got[1] > got[2])) o.fail("block delays not strictly decreasing");
  o.detail = std::to_string(got[0]) + " > " + std::to_string(got[1]) + " > " + std::to_string(got[2]) + " ps";
  return o;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return out + "\n<exit " + std::to_string(status) + ">";
}

Outcome determinism() {
  namespace fs = std::filesystem;
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "blockscope_acceptance";
  fs::remove_all(dir);
  const std::string cli = BLOCKSCOPE_CLI_PATH;

  std::vector<std::string> commands;
  for (const char* fixture : {"gcd", "fig6", "random:42:20", "random:7:300"}) {
    const std::string out = (dir / fixture).string();
    commands.push_back(cli + " fixtures " + fixture + " '" + out + "' 2>&1");
    if (std::system((cli + " fixtures " + fixture + " '" + out + "' > /dev/null").c_str()) != 0) {
      o.fail(std::string("fixtures ") + fixture + " failed");
      return o;
    }
  }
  std::vector<std::string> inputs = {
      "--netlist '" + (dir / "gcd" / "gcd.bnl").string() + "' --profile '" + (dir / "gcd" / "gcd.bpf").string() + "'",
      "--netlist '" + (dir / "fig6" / "fig6.bnl").string() + "'",
      "--netlist '" + (dir / "random:42:20" / "random_42_20.bnl").string() + "'",
      "--netlist '" + (dir / "random:7:300" / "random_7_300.bnl").string() + "' --group-depth 1",
  };
  for (const std::string& input : inputs) {
    for (const char* format : {"text", "csv", "structured"}) {
      for (const char* extra : {"", " --override-delays --device virtex5", " --block-delay-nodes-only"}) {
        commands.push_back(cli + " analyze " + input + " --format " + format + extra + " 2>&1");
      }
    }
  }

  for (const std::string& command : commands) {
    std::string reference;
    for (const char* threads : {"1", "4"}) {
      for (int run = 0; run < 5; ++run) {
        const std::string out = capture(std::string("BLOCKSCOPE_THREADS=") + threads + " " + command);
        if (reference.empty()) {
          reference = out;
          if (out.find("<exit 0>") == std::string::npos) o.fail("non-zero exit: " + command);
        } else if (out != reference) {
          o.fail("output differs: " + command);
        }
      }
    }
  }
  fs::remove_all(dir);
  if (o.ok) o.detail = std::to_string(commands.size()) + " invocations x 10 runs";
  return o;
}

Outcome round_trips() {
  Outcome o;
  std::vector<std::pair<Netlist, ActivityProfile>> cases;
  for (int w = 1; w <= 8; ++w) {
    GcdFixture g = gen_gcd(w);
    cases.emplace_back(std::move(g.netlist), std::move(g.profile));
  }
  cases.emplace_back(gen_fig6(), ActivityProfile{});
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    Netlist n = gen_random(seed, random_size(seed));
    std::vector<BlockLabel> labels = build_registry(n).labels();
    if (labels.empty()) labels.push_back(BlockLabel::parse("idle"));
    ActivityProfile p = gen_random_profile(seed, labels);
    cases.emplace_back(std::move(n), std::move(p));
  }

  for (const auto& [n, p] : cases) {
    const std::string text = serialize_netlist(n);
    const Netlist back = parse_netlist(text).body;
    if (!equivalent(back, n) || serialize_netlist(back) != text) o.fail("netlist round trip");

    const BlockRegistry r = build_registry(n);
    CombinedReport report;
    report.metadata.cell_count = n.cells.size();
    report.metadata.device = "spartan6";
    report.area = area_report(n, r);
    report.delay = delay_report(TimingGraph(n), r);
    if (p.cycles > 0) {
      const std::string ptext = serialize_profile(p);
      const ActivityProfile pback = parse_profile(ptext);
      if (!(pback == p) || serialize_profile(pback) != ptext) o.fail("profile round trip");
      report.power = power_score(n, r, PowerModel::defaults(), p);
    }
    const std::string doc = render_structured(report);
    const CombinedReport rback = parse_structured(doc);
    if (render_structured(rback) != doc || rback.delay != report.delay) o.fail("structured report round trip");
  }
  o.detail = std::to_string(cases.size()) + " instances";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
    double limit_s;  // 0 = no time limit
  };
  const std::vector<Criterion> criteria = {
      {"fig6-reproduction", fig6_reproduction, 1.0},
      {"longest-path-oracle-equivalence", oracle_equivalence, 60.0},
      {"area-conservation", area_conservation, 0.0},
      {"delay-dominance-and-global-consistency", delay_invariants, 0.0},
      {"switching-factor-replay", switching_factor_replay, 0.0},
      {"power-score-arithmetic", power_arithmetic, 0.0},
      {"device-profile-scaling", device_scaling, 0.0},
      {"cli-determinism", determinism, 0.0},
      {"round-trips", round_trips, 0.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_s > 0 && seconds > c.limit_s) o.fail("took " + std::to_string(seconds) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.name << " (" << timing << ")"
              << (o.detail.empty() ? "" : ": " + o.detail) << '\n';
    failures += o.ok ? 0 : 1;
  }
  std::cout << (failures ? "FAIL" : "PASS") << " acceptance: " << criteria.size() - failures << "/"
            << criteria.size() << " criteria\n";
  return failures ? 1 : 0;
}
