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

#ifndef BLOCKSCOPE_TYPES_HPP
#define BLOCKSCOPE_TYPES_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace blockscope {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Delays are integer picoseconds throughout the graph layer.
using Picoseconds = std::int64_t;

/// Node kinds of the circuit graph. Flip-flops are split into a D-port sink
/// and a Q-port source that are never combinationally connected.
enum class CellKind : std::uint8_t {
  LUT1,
  LUT2,
  LUT3,
  LUT4,
  LUT5,
  LUT6,
  FF_D,
  FF_Q,
  CLK,
  IN,
  OUT,
  MEM_IN,
};

inline constexpr std::array<CellKind, 12> kAllCellKinds = {
    CellKind::LUT1, CellKind::LUT2, CellKind::LUT3, CellKind::LUT4,
    CellKind::LUT5, CellKind::LUT6, CellKind::FF_D, CellKind::FF_Q,
    CellKind::CLK,  CellKind::IN,   CellKind::OUT,  CellKind::MEM_IN};

inline constexpr std::string_view to_string(CellKind kind) {
  switch (kind) {
    case CellKind::LUT1: return "LUT1";
    case CellKind::LUT2: return "LUT2";
    case CellKind::LUT3: return "LUT3";
    case CellKind::LUT4: return "LUT4";
    case CellKind::LUT5: return "LUT5";
    case CellKind::LUT6: return "LUT6";
    case CellKind::FF_D: return "FF_D";
    case CellKind::FF_Q: return "FF_Q";
    case CellKind::CLK: return "CLK";
    case CellKind::IN: return "IN";
    case CellKind::OUT: return "OUT";
    case CellKind::MEM_IN: return "MEM_IN";
  }
  return "?";
}

inline std::optional<CellKind> parse_cell_kind(std::string_view text) {
  for (CellKind kind : kAllCellKinds) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

/// Path start points: clock ports, primary inputs and register outputs.
inline constexpr bool is_source(CellKind kind) {
  return kind == CellKind::CLK || kind == CellKind::IN || kind == CellKind::FF_Q;
}

/// Path end points: register inputs, memory write inputs and primary outputs.
inline constexpr bool is_sink(CellKind kind) {
  return kind == CellKind::FF_D || kind == CellKind::MEM_IN || kind == CellKind::OUT;
}

inline constexpr bool is_lut(CellKind kind) {
  return kind >= CellKind::LUT1 && kind <= CellKind::LUT6;
}

/// Number of LUT inputs (1..6), 0 for non-LUT kinds.
inline constexpr int lut_inputs(CellKind kind) {
  return is_lut(kind) ? static_cast<int>(kind) - static_cast<int>(CellKind::LUT1) + 1 : 0;
}

inline constexpr CellKind lut_of_size(int inputs) {
  return static_cast<CellKind>(static_cast<int>(CellKind::LUT1) + inputs - 1);
}

/// Resource classes used for area and power accounting. A paired FF_D/FF_Q
/// counts as a single FF resource.
enum class ResourceKind : std::uint8_t {
  LUT1,
  LUT2,
  LUT3,
  LUT4,
  LUT5,
  LUT6,
  FF,
  CLK,
  IN,
  OUT,
  MEM_IN,
};

inline constexpr std::size_t kResourceKindCount = 11;

inline constexpr std::array<ResourceKind, kResourceKindCount> kAllResourceKinds = {
    ResourceKind::LUT1, ResourceKind::LUT2, ResourceKind::LUT3, ResourceKind::LUT4,
    ResourceKind::LUT5, ResourceKind::LUT6, ResourceKind::FF,   ResourceKind::CLK,
    ResourceKind::IN,   ResourceKind::OUT,  ResourceKind::MEM_IN};

inline constexpr std::string_view to_string(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::LUT1: return "LUT1";
    case ResourceKind::LUT2: return "LUT2";
    case ResourceKind::LUT3: return "LUT3";
    case ResourceKind::LUT4: return "LUT4";
    case ResourceKind::LUT5: return "LUT5";
    case ResourceKind::LUT6: return "LUT6";
    case ResourceKind::FF: return "FF";
    case ResourceKind::CLK: return "CLK";
    case ResourceKind::IN: return "IN";
    case ResourceKind::OUT: return "OUT";
    case ResourceKind::MEM_IN: return "MEM_IN";
  }
  return "?";
}

inline std::optional<ResourceKind> parse_resource_kind(std::string_view text) {
  for (ResourceKind kind : kAllResourceKinds) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

inline constexpr ResourceKind resource_of(CellKind kind) {
  switch (kind) {
    case CellKind::LUT1: return ResourceKind::LUT1;
    case CellKind::LUT2: return ResourceKind::LUT2;
    case CellKind::LUT3: return ResourceKind::LUT3;
    case CellKind::LUT4: return ResourceKind::LUT4;
    case CellKind::LUT5: return ResourceKind::LUT5;
    case CellKind::LUT6: return ResourceKind::LUT6;
    case CellKind::FF_D:
    case CellKind::FF_Q: return ResourceKind::FF;
    case CellKind::CLK: return ResourceKind::CLK;
    case CellKind::IN: return ResourceKind::IN;
    case CellKind::OUT: return ResourceKind::OUT;
    case CellKind::MEM_IN: return ResourceKind::MEM_IN;
  }
  return ResourceKind::CLK;
}

inline constexpr std::size_t index_of(ResourceKind kind) { return static_cast<std::size_t>(kind); }

/// Base of all errors raised for bad user input. `rule` names the violated
/// rule; `line`/`column` are 1-based and 0 when not applicable.
class Error : public std::runtime_error {
 public:
  Error(std::string rule, const std::string& message, std::size_t line = 0,
        std::size_t column = 0)
      : std::runtime_error(message), rule_(std::move(rule)), line_(line), column_(column) {}

  const std::string& rule() const { return rule_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string rule_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace blockscope

#endif  // BLOCKSCOPE_TYPES_HPP
