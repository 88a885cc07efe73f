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

// Deterministic fixture generators. Randomness uses std::mt19937_64 with
// explicit modulo reduction so fixtures are identical on every platform.

#ifndef BLOCKSCOPE_FIXTURES_HPP
#define BLOCKSCOPE_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "blockscope/device.hpp"
#include "blockscope/netlist.hpp"
#include "blockscope/profile.hpp"

namespace blockscope {

namespace detail {

class FixtureRng {
 public:
  explicit FixtureRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + engine_() % (hi - lo + 1); }
  bool chance(unsigned percent) { return range(0, 99) < percent; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[range(0, i - 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

// Collects cells and nets; LUT kinds follow fan-in.
class NetlistBuilder {
 public:
  explicit NetlistBuilder(const DeviceProfile& device) : device_(device) {}

  void port(const std::string& id, CellKind kind) { kinds_.emplace_back(id, kind); }

  void lut(const std::string& id, const std::vector<std::string>& inputs) {
    kinds_.emplace_back(id, lut_of_size(static_cast<int>(inputs.size())));
    for (const std::string& in : inputs) netlist_.nets.push_back({in, id, device_.net_delay});
  }

  void connect(const std::string& src, const std::string& dst) {
    netlist_.nets.push_back({src, dst, device_.net_delay});
  }

  void pair(const std::string& d, const std::string& q) { netlist_.ff_pairs.push_back({d, q}); }

  Netlist build() {
    for (const auto& [id, kind] : kinds_) netlist_.cells.push_back({id, kind, device_.logic_delay(kind)});
    return canonicalize(std::move(netlist_));
  }

 private:
  DeviceProfile device_;
  std::vector<std::pair<std::string, CellKind>> kinds_;
  Netlist netlist_;
};

}  // namespace detail

struct GcdFixture {
  Netlist netlist;
  ActivityProfile profile;
};

/// Swap/subtract GCD with two `bit_width`-bit registers x and y.
///
/// Blocks: `x`, `y` hold the flip-flops; `swap` owns the x > y comparator,
/// the y != 0 detector, its firing condition and the swap multiplexers;
/// `subtract` owns the x <= y comparator, the subtractor and the final y
/// multiplexer. Register bits are numbered from the MSB, so the LSB Q port
/// of y has the largest id of all sources; every LUT depends on it, which
/// puts all Q ports first in the topological order.
///
/// The profile is a 10-cycle trace in which the two rules never fire in the
/// same cycle.
inline GcdFixture gen_gcd(int bit_width, const DeviceProfile& device = builtin_devices()[0]) {
  if (bit_width < 1 || bit_width > 8) throw Error("fixture-range", "gcd bit width must be in 1..8");
  const int w = bit_width;
  const auto reg = [&](char r, int bit, char port) {
    return std::string(1, r) + "__r" + std::to_string(w - 1 - bit) + "_" + port;
  };
  const auto idx = [](const char* base, int i) { return std::string(base) + std::to_string(i); };

  detail::NetlistBuilder b(device);
  for (char r : {'x', 'y'}) {
    for (int i = 0; i < w; ++i) {
      b.port(reg(r, i, 'D'), CellKind::FF_D);
      b.port(reg(r, i, 'Q'), CellKind::FF_Q);
      b.pair(reg(r, i, 'D'), reg(r, i, 'Q'));
    }
  }

  // Ripple chains run LSB to MSB.
  for (int i = 0; i < w; ++i) {
    std::vector<std::string> gt = {reg('x', i, 'Q'), reg('y', i, 'Q')};
    std::vector<std::string> le = gt;
    std::vector<std::string> dif = gt;
    if (i > 0) {
      gt.push_back(idx("swap__gt", i - 1));
      le.push_back(idx("subtract__le", i - 1));
      dif.push_back(idx("subtract__brw", i - 1));
    }
    b.lut(idx("swap__gt", i), gt);
    b.lut(idx("subtract__le", i), le);
    b.lut(idx("subtract__dif", i), dif);
    if (i < w - 1) b.lut(idx("subtract__brw", i), dif);

    std::vector<std::string> nz = {reg('y', i, 'Q')};
    if (i > 0) nz.push_back(idx("swap__nz", i - 1));
    b.lut(idx("swap__nz", i), nz);
  }
  const std::string nonzero = idx("swap__nz", w - 1);
  b.lut("swap__fire", {idx("swap__gt", w - 1), nonzero});
  b.lut("subtract__fire", {idx("subtract__le", w - 1), nonzero});

  for (int i = 0; i < w; ++i) {
    b.lut(idx("swap__xmux", i), {reg('x', i, 'Q'), reg('y', i, 'Q'), "swap__fire"});
    b.connect(idx("swap__xmux", i), reg('x', i, 'D'));
    b.lut(idx("swap__ymux", i), {reg('x', i, 'Q'), reg('y', i, 'Q'), "swap__fire"});
    b.lut(idx("subtract__ymux", i), {idx("swap__ymux", i), idx("subtract__dif", i), "subtract__fire"});
    b.connect(idx("subtract__ymux", i), reg('y', i, 'D'));
  }

  GcdFixture fixture;
  fixture.netlist = b.build();

  ActivityProfile& p = fixture.profile;
  p.cycles = 10;
  p.rule_block.emplace("swap", BlockLabel::parse("swap"));
  p.rule_block.emplace("subtract", BlockLabel::parse("subtract"));
  p.firings["swap"] = {1, 3};
  p.firings["subtract"] = {2, 4, 5};
  p.writes = {{"swap", "x"}, {"swap", "y"}, {"subtract", "y"}};
  for (const char* block : {"swap", "subtract"}) {
    p.reads.emplace(BlockLabel::parse(block), "x");
    p.reads.emplace(BlockLabel::parse(block), "y");
  }
  return fixture;
}

/// Annotated block `blk` of four cells spread over two combinational trees.
/// With unit LUT delays and zero net delays, expanding from the four cells
/// gives connected sets of 7 and 5 cells; the heaviest crossing path has
/// 5 LUTs and at most 3 of them belong to the block. The remaining cells
/// are unannotated context that the expansion must leave out.
inline Netlist gen_fig6() {
  detail::NetlistBuilder b(make_device("unit", 6, 0));

  // 7-cell tree: fa_q -> fa_l1 -> blk__a2 -> blk__a3 -> blk__a4 -> fa_l5 -> fa_d
  b.port("fa_q", CellKind::FF_Q);
  b.lut("fa_l1", {"fa_q"});
  b.lut("blk__a2", {"fa_l1"});
  b.lut("blk__a3", {"blk__a2"});
  b.lut("blk__a4", {"blk__a3"});
  b.port("fe_q", CellKind::FF_Q);
  b.lut("fa_l5", {"blk__a4", "fe_q"});
  b.port("fa_d", CellKind::FF_D);
  b.connect("fa_l5", "fa_d");

  // 5-cell tree with two branches: fb_q -> blk__b1 -> {fb_l2 -> fb_d1, fb_d2}
  b.port("fb_q", CellKind::FF_Q);
  b.lut("blk__b1", {"fb_q"});
  b.lut("fb_l2", {"blk__b1"});
  b.port("fb_d1", CellKind::FF_D);
  b.port("fb_d2", CellKind::FF_D);
  b.connect("fb_l2", "fb_d1");
  b.connect("blk__b1", "fb_d2");

  // Context paths that do not cross the block.
  b.lut("fc_l1", {"fa_l1"});
  b.port("fc_d", CellKind::FF_D);
  b.connect("fc_l1", "fc_d");
  b.lut("fc_l2", {"fa_q"});
  b.port("fc_d2", CellKind::FF_D);
  b.connect("fc_l2", "fc_d2");
  b.port("fd_q", CellKind::FF_Q);
  b.lut("fd_l", {"fd_q"});
  b.port("fd_out", CellKind::OUT);
  b.connect("fd_l", "fd_out");

  Netlist netlist = b.build();
  for (Cell& cell : netlist.cells) {
    if (is_lut(cell.kind)) cell.logic_delay = 1;
  }
  return netlist;
}

struct RandomNetlistOptions {
  Picoseconds max_delay = 1000;  // delays drawn from [1, max_delay]
  unsigned edge_percent = 35;
};

/// Random valid netlist of `n_cells` cells: mixed sources, sinks and LUTs,
/// 60-100% of cells annotated into 1-5 blocks (some hierarchical), ids
/// assigned independently of topological position.
inline Netlist gen_random(std::uint64_t seed, std::size_t n_cells, const RandomNetlistOptions& options = {}) {
  if (n_cells < 2) throw Error("fixture-range", "random fixtures need at least 2 cells");
  detail::FixtureRng rng(seed);
  static const std::vector<std::string> kLabels = {"alu", "ctl", "mem.rd", "mem.wr", "io"};

  // Topological position p gets a kind; only forward edges are drawn.
  std::vector<CellKind> kinds(n_cells);
  for (std::size_t p = 0; p < n_cells; ++p) {
    const std::uint64_t roll = rng.range(0, 99);
    if (roll < 25) {
      kinds[p] = rng.chance(70) ? CellKind::FF_Q : (rng.chance(50) ? CellKind::IN : CellKind::CLK);
    } else if (roll < 50) {
      const std::uint64_t s = rng.range(0, 9);
      kinds[p] = s < 6 ? CellKind::FF_D : (s < 8 ? CellKind::OUT : CellKind::MEM_IN);
    } else {
      kinds[p] = CellKind::LUT1;
    }
  }

  std::vector<std::vector<std::size_t>> fanin(n_cells);
  std::vector<std::tuple<std::size_t, std::size_t, Picoseconds>> edges;
  for (std::size_t j = 0; j < n_cells; ++j) {
    if (is_source(kinds[j])) continue;
    for (std::size_t i = 0; i < j; ++i) {
      if (is_sink(kinds[i]) || fanin[j].size() >= 6) continue;
      if (!rng.chance(options.edge_percent)) continue;
      fanin[j].push_back(i);
      edges.emplace_back(i, j, static_cast<Picoseconds>(rng.range(1, static_cast<std::uint64_t>(options.max_delay))));
    }
  }
  for (std::size_t p = 0; p < n_cells; ++p) {
    if (is_lut(kinds[p])) kinds[p] = lut_of_size(static_cast<int>(std::clamp<std::size_t>(fanin[p].size(), 1, 6)));
  }

  const std::size_t n_blocks = rng.range(1, 5);
  const std::uint64_t percent = rng.range(60, 100);
  const std::size_t annotated = (n_cells * percent + 99) / 100;
  std::vector<std::size_t> order(n_cells);
  for (std::size_t p = 0; p < n_cells; ++p) order[p] = p;
  rng.shuffle(order);
  std::vector<int> block_of(n_cells, -1);
  for (std::size_t k = 0; k < annotated; ++k) block_of[order[k]] = static_cast<int>(rng.range(0, n_blocks - 1));

  std::vector<std::size_t> tag(n_cells);
  for (std::size_t p = 0; p < n_cells; ++p) tag[p] = p;
  rng.shuffle(tag);
  std::vector<std::string> ids(n_cells);
  for (std::size_t p = 0; p < n_cells; ++p) {
    std::string local = "c" + std::string(tag[p] < 10 ? "0" : "") + std::to_string(tag[p]);
    ids[p] = block_of[p] < 0 ? "n_" + local : kLabels[static_cast<std::size_t>(block_of[p])] + "__" + local;
  }

  Netlist netlist;
  for (std::size_t p = 0; p < n_cells; ++p) {
    const Picoseconds delay =
        is_source(kinds[p]) ? 0 : static_cast<Picoseconds>(rng.range(1, static_cast<std::uint64_t>(options.max_delay)));
    netlist.cells.push_back({ids[p], kinds[p], delay});
  }
  for (const auto& [i, j, delay] : edges) netlist.nets.push_back({ids[i], ids[j], delay});

  std::vector<std::size_t> qs;
  for (std::size_t p = 0; p < n_cells; ++p) {
    if (kinds[p] == CellKind::FF_Q) qs.push_back(p);
  }
  for (std::size_t p = 0; p < n_cells && !qs.empty(); ++p) {
    if (kinds[p] != CellKind::FF_D || !rng.chance(70)) continue;
    const std::size_t pick = rng.range(0, qs.size() - 1);
    netlist.ff_pairs.push_back({ids[p], ids[qs[pick]]});
    qs.erase(qs.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return canonicalize(std::move(netlist));
}

/// Random activity profile over 1-4 rules in blocks drawn from `blocks`.
inline ActivityProfile gen_random_profile(std::uint64_t seed, const std::vector<BlockLabel>& blocks) {
  detail::FixtureRng rng(seed);
  ActivityProfile p;
  p.cycles = rng.range(1, 40);
  const std::size_t n_rules = rng.range(1, 4);
  const std::size_t n_states = rng.range(1, 4);
  for (std::size_t r = 0; r < n_rules; ++r) {
    const std::string rule = "r" + std::to_string(r);
    p.rule_block.emplace(rule, blocks[rng.range(0, blocks.size() - 1)]);
    const unsigned density = static_cast<unsigned>(rng.range(0, 100));
    std::vector<Cycle> fires;
    for (Cycle c = 0; c < p.cycles; ++c) {
      if (rng.chance(density)) fires.push_back(c);
    }
    if (!fires.empty()) p.firings.emplace(rule, std::move(fires));
    for (std::size_t s = 0; s < n_states; ++s) {
      if (rng.chance(40)) p.writes.emplace(rule, "s" + std::to_string(s));
    }
  }
  std::vector<std::string> written;
  for (const auto& [rule, state] : p.writes) written.push_back(state);
  if (!written.empty()) {
    for (const auto& [rule, label] : p.rule_block) {
      for (const std::string& state : written) {
        if (rng.chance(40)) p.reads.emplace(label, state);
      }
    }
  }
  return p;
}

}  // namespace blockscope

#endif  // BLOCKSCOPE_FIXTURES_HPP
