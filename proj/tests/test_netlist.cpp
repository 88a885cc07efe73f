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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "test_support.hpp"

namespace blockscope {
namespace {

using testing::netlist_of;

Netlist chain() {
  return netlist_of(
      "cell q FF_Q 0\n"
      "cell a LUT1 5\n"
      "cell b LUT2 7\n"
      "cell d FF_D 0\n"
      "net q -> a 1\n"
      "net a -> b 2\n"
      "net q -> b 3\n"
      "net b -> d 4\n"
      "ffpair d q\n");
}

TEST(CellKindTest, NamesRoundTrip) {
  for (CellKind k : kAllCellKinds) EXPECT_EQ(parse_cell_kind(to_string(k)), k);
  EXPECT_FALSE(parse_cell_kind("LUT9"));
  EXPECT_FALSE(parse_cell_kind("lut1"));
}

TEST(CellKindTest, SourcesAndSinks) {
  for (CellKind k : {CellKind::CLK, CellKind::IN, CellKind::FF_Q}) EXPECT_TRUE(is_source(k));
  for (CellKind k : {CellKind::FF_D, CellKind::MEM_IN, CellKind::OUT}) EXPECT_TRUE(is_sink(k));
  for (int k = 1; k <= 6; ++k) {
    EXPECT_FALSE(is_source(lut_of_size(k)));
    EXPECT_FALSE(is_sink(lut_of_size(k)));
    EXPECT_EQ(lut_inputs(lut_of_size(k)), k);
  }
}

TEST(CellIdTest, Grammar) {
  EXPECT_TRUE(is_valid_cell_id("swap__gt0"));
  EXPECT_TRUE(is_valid_cell_id("mem.rd__x_1"));
  EXPECT_TRUE(is_valid_cell_id("_tmp"));
  EXPECT_FALSE(is_valid_cell_id(""));
  EXPECT_FALSE(is_valid_cell_id("0abc"));
  EXPECT_FALSE(is_valid_cell_id(".abc"));
  EXPECT_FALSE(is_valid_cell_id("a,b"));
  EXPECT_FALSE(is_valid_cell_id("a-b"));
}

TEST(ValidateTest, ValidChainIsOk) { EXPECT_TRUE(validate(chain()).ok()); }

TEST(ValidateTest, EmptyNetlistIsOk) {
  EXPECT_TRUE(validate(Netlist{}).ok());
  EXPECT_TRUE(topological_order(Netlist{}).empty());
}

TEST(ValidateTest, DanglingReference) {
  Netlist n = chain();
  n.nets.push_back({"a", "ghost", 0});
  const ValidationReport r = validate(n);
  ASSERT_TRUE(r.has("dangling-reference"));
  EXPECT_EQ(r.violations.front().ids, (std::vector<std::string>{"a", "ghost"}));
}

TEST(ValidateTest, EdgeIntoSourceAndOutOfSink) {
  Netlist n = chain();
  n.nets.push_back({"a", "q", 0});
  n.nets.push_back({"d", "b", 0});
  const ValidationReport r = validate(n);
  EXPECT_TRUE(r.has("edge-into-source-kind"));
  EXPECT_TRUE(r.has("edge-out-of-sink-kind"));
}

TEST(ValidateTest, NegativeAndSourceDelays) {
  Netlist n = chain();
  n.cells[1].logic_delay = -1;
  n.cells[0].logic_delay = 3;
  n.nets[0].net_delay = -2;
  const ValidationReport r = validate(n);
  EXPECT_TRUE(r.has("negative-delay"));
  EXPECT_TRUE(r.has("source-nonzero-delay"));
}

TEST(ValidateTest, DuplicateIdsAndNets) {
  Netlist n = chain();
  n.cells.push_back({"a", CellKind::LUT1, 1});
  n.nets.push_back({"a", "b", 9});
  const ValidationReport r = validate(n);
  EXPECT_TRUE(r.has("duplicate-cell-id"));
  EXPECT_TRUE(r.has("duplicate-net"));
}

TEST(ValidateTest, FfPairRules) {
  Netlist n = chain();
  n.ff_pairs.push_back({"q", "d"});
  n.ff_pairs.push_back({"nope", "q"});
  const ValidationReport r = validate(n);
  EXPECT_TRUE(r.has("ffpair-kind"));
  EXPECT_TRUE(r.has("ffpair-dangling"));
  EXPECT_TRUE(r.has("ffpair-duplicate"));
}

TEST(ValidateTest, CycleListsItsCellsFromSmallestId) {
  Netlist n = netlist_of(
      "cell q FF_Q 0\n"
      "cell x LUT2 1\n"
      "cell y LUT1 1\n"
      "cell b LUT1 1\n"
      "net q -> x 0\n");
  n.nets.push_back({"x", "y", 0});
  n.nets.push_back({"y", "b", 0});
  n.nets.push_back({"b", "x", 0});
  const ValidationReport r = validate(n);
  ASSERT_TRUE(r.has("combinational-cycle"));
  const Violation& v = r.violations.back();
  EXPECT_EQ(v.ids, (std::vector<std::string>{"b", "x", "y"}));
  EXPECT_EQ(v.message, "combinational cycle through cells {b, x, y}");
  EXPECT_THROW(topological_order(n), ValidationError);
}

TEST(TopologicalOrderTest, RespectsEdgesAndBreaksTiesById) {
  const Netlist n = chain();
  EXPECT_EQ(topological_order(n), (std::vector<std::string>{"q", "a", "b", "d"}));

  const Netlist flat = netlist_of("cell z IN 0\ncell m IN 0\ncell a OUT 0\n");
  EXPECT_EQ(topological_order(flat), (std::vector<std::string>{"a", "m", "z"}));
}

TEST(TopologicalOrderTest, RandomNetlistsRespectEveryNet) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Netlist n = gen_random(seed, 2 + seed % 40);
    const std::vector<std::string> order = topological_order(n);
    ASSERT_EQ(order.size(), n.cells.size());
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (const Net& net : n.nets) EXPECT_LT(pos.at(net.src), pos.at(net.dst)) << "seed " << seed;
  }
}

TEST(TopologicalOrderTest, GcdQPortsFirstThenLogicThenDPorts) {
  const Netlist n = gen_gcd(4).netlist;
  const std::vector<std::string> order = topological_order(n);
  std::map<std::string, CellKind> kind;
  for (const Cell& c : n.cells) kind[c.id] = c.kind;
  const auto phase = [&](const std::string& id) {
    return kind[id] == CellKind::FF_Q ? 0 : kind[id] == CellKind::FF_D ? 2 : 1;
  };
  for (std::size_t i = 1; i < order.size(); ++i) EXPECT_LE(phase(order[i - 1]), phase(order[i]));
}

TEST(CanonicalizeTest, EquivalenceIgnoresOrder) {
  Netlist a = chain();
  Netlist b = a;
  std::reverse(b.cells.begin(), b.cells.end());
  std::reverse(b.nets.begin(), b.nets.end());
  EXPECT_NE(a, b);
  EXPECT_TRUE(equivalent(a, b));
  b.nets[0].net_delay += 1;
  EXPECT_FALSE(equivalent(a, b));
}

TEST(TimingGraphTest, IndicesFollowSortedIds) {
  const TimingGraph g(chain());
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g.id(0), "a");
  EXPECT_EQ(g.id(3), "q");
  EXPECT_EQ(g.kind(*g.find("d")), CellKind::FF_D);
  EXPECT_EQ(g.logic_delay(*g.find("b")), 7);
  EXPECT_EQ(g.net_delay(*g.find("q"), *g.find("b")), 3);
  EXPECT_EQ(g.ff_partner(*g.find("d")), g.find("q"));
  EXPECT_FALSE(g.find("zz"));
  EXPECT_EQ(g.fanout(*g.find("q")).size(), 2u);
  EXPECT_EQ(g.fanin(*g.find("b")).size(), 2u);
}

TEST(TimingGraphTest, RejectsInvalidNetlist) {
  Netlist n = chain();
  n.nets.push_back({"b", "a", 0});
  EXPECT_THROW(TimingGraph{n}, ValidationError);
}

}  // namespace
}  // namespace blockscope
