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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blockscope/cli.hpp"

int main(int argc, char** argv) {
  using namespace blockscope;

  CLI::App app{"Per-block area, delay and power breakdown of annotated FPGA netlists"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> metrics;
  std::string format = "text";
  std::size_t group_depth = 0;
  CLI::App* analyze = app.add_subcommand("analyze", "Analyze a netlist and print a report");
  analyze->add_option("--netlist", config.netlist_path, "Netlist file (.bnl)")->required();
  analyze->add_option("--profile", config.profile_path, "Activity profile (.bpf)");
  analyze->add_option("--power-model", config.power_model_path, "Power coefficient file");
  analyze->add_option("--device", config.device, "spartan6, virtex5, virtex7 or a device profile path")
      ->capture_default_str();
  analyze->add_option("--metrics", metrics, "Comma-separated subset of area,delay,power")->delimiter(',');
  analyze->add_option("--group-depth", group_depth, "Group blocks to this hierarchy depth");
  analyze->add_option("--format", format, "text, csv or structured")->capture_default_str();
  analyze->add_flag("--block-delay-nodes-only", config.block_delay_nodes_only,
                    "Exclude intra-block nets from block delay");
  analyze->add_flag("--override-delays", config.override_delays,
                    "Replace netlist delays with the device profile's");

  std::string fixture_name, out_dir;
  CLI::App* fixtures = app.add_subcommand("fixtures", "Write a generated fixture");
  fixtures->add_option("name", fixture_name, "gcd, fig6 or random:<seed>:<n>")->required();
  fixtures->add_option("outdir", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (*fixtures) return run_fixtures(fixture_name, out_dir, std::cout, std::cerr);

  for (const std::string& m : metrics) {
    const auto metric = parse_metric(m);
    if (!metric) {
      std::cerr << "blockscope: error: unknown metric '" << m << "' (expected area, delay or power)\n";
      return kExitInputError;
    }
    config.metrics.insert(*metric);
  }
  const auto fmt = parse_output_format(format);
  if (!fmt) {
    std::cerr << "blockscope: error: unknown format '" << format << "' (expected text, csv or structured)\n";
    return kExitInputError;
  }
  config.format = *fmt;
  if (analyze->count("--group-depth")) config.group_depth = group_depth;
  return run(config, std::cout, std::cerr);
}
