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

#ifndef BLOCKSCOPE_DEVICE_HPP
#define BLOCKSCOPE_DEVICE_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "blockscope/area.hpp"
#include "blockscope/netlist.hpp"
#include "blockscope/text_format.hpp"

namespace blockscope {

inline constexpr std::string_view kDeviceMagic = "blockscope-device";

/// Coefficient set standing in for a target FPGA family. Delays only feed
/// the fixture generator and --override-delays; netlists otherwise carry
/// their own per-cell delays.
struct DeviceProfile {
  std::string name;
  Picoseconds lut6_delay = 0;
  Picoseconds net_delay = 0;
  AreaWeights weights = AreaWeights::defaults();

  /// LUTk delay = LUT6 delay * k / 6, rounded half up to whole ps.
  Picoseconds lut_delay(int inputs) const { return (lut6_delay * inputs * 2 + 6) / 12; }

  Picoseconds logic_delay(CellKind kind) const { return is_lut(kind) ? lut_delay(lut_inputs(kind)) : 0; }

  friend bool operator==(const DeviceProfile&, const DeviceProfile&) = default;
};

inline DeviceProfile make_device(std::string name, Picoseconds lut6, Picoseconds net) {
  DeviceProfile d;
  d.name = std::move(name);
  d.lut6_delay = lut6;
  d.net_delay = net;
  return d;
}

/// Built-in families. LUT6 delays of about 200, 80 and 40 ps; routing
/// delay per net is taken as half the LUT6 delay.
inline const std::array<DeviceProfile, 3>& builtin_devices() {
  static const std::array<DeviceProfile, 3> devices = {
      make_device("spartan6", 200, 100),
      make_device("virtex5", 80, 40),
      make_device("virtex7", 40, 20),
  };
  return devices;
}

inline std::optional<DeviceProfile> find_builtin_device(std::string_view name) {
  for (const DeviceProfile& d : builtin_devices()) {
    if (d.name == name) return d;
  }
  return std::nullopt;
}

/// Custom profile file:
///
///     blockscope-device v1
///     name <id>
///     lut6_delay <ps>
///     net_delay <ps>
///     weight <KIND> <value>      (optional, repeatable)
inline DeviceProfile parse_device_profile(std::string_view text) {
  const std::vector<Line> lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("missing-header", "empty device profile", 1);
  detail::expect_header(lines.front(), kDeviceMagic, "v1");

  DeviceProfile device;
  bool have_name = false, have_lut = false, have_net = false;
  std::set<ResourceKind> weighted;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string_view directive = line.tokens.front().text;
    const auto once = [&](bool& flag) {
      if (flag) throw ParseError("duplicate-field", std::string(directive) + " given twice", line.number, 1);
      flag = true;
    };
    if (directive == "name") {
      detail::expect_arity(line, 2, "name <id>");
      once(have_name);
      if (!is_valid_cell_id(line.tokens[1].text)) {
        throw ParseError("lexical", "invalid device name '" + std::string(line.tokens[1].text) + "'", line.number,
                         line.tokens[1].column);
      }
      device.name = std::string(line.tokens[1].text);
    } else if (directive == "lut6_delay") {
      detail::expect_arity(line, 2, "lut6_delay <ps>");
      once(have_lut);
      device.lut6_delay = detail::parse_delay(line, line.tokens[1]);
    } else if (directive == "net_delay") {
      detail::expect_arity(line, 2, "net_delay <ps>");
      once(have_net);
      device.net_delay = detail::parse_delay(line, line.tokens[1]);
    } else if (directive == "weight") {
      detail::expect_arity(line, 3, "weight <KIND> <value>");
      const auto kind = parse_resource_kind(line.tokens[1].text);
      if (!kind) {
        throw ParseError("unknown-kind", "unknown resource kind " + std::string(line.tokens[1].text), line.number,
                         line.tokens[1].column);
      }
      if (!weighted.insert(*kind).second) {
        throw ParseError("duplicate-field", "weight for " + std::string(to_string(*kind)) + " given twice",
                         line.number, 1);
      }
      device.weights[*kind] = detail::parse_decimal(line, line.tokens[2], "weight");
    } else {
      throw ParseError("unknown-directive", "unknown directive '" + std::string(directive) + "'", line.number,
                       line.tokens.front().column);
    }
  }
  const std::size_t last = lines.back().number;
  if (!have_name) throw ParseError("missing-field", "device profile has no 'name' line", last);
  if (!have_lut) throw ParseError("missing-field", "device profile has no 'lut6_delay' line", last);
  if (!have_net) throw ParseError("missing-field", "device profile has no 'net_delay' line", last);
  return device;
}

/// Replaces every cell and net delay with the device's characterization.
/// Structure is untouched.
inline Netlist apply_device_delays(Netlist netlist, const DeviceProfile& device) {
  for (Cell& cell : netlist.cells) cell.logic_delay = device.logic_delay(cell.kind);
  for (Net& net : netlist.nets) net.net_delay = device.net_delay;
  return netlist;
}

}  // namespace blockscope

#endif  // BLOCKSCOPE_DEVICE_HPP
