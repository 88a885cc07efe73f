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

#include <string>

#include "test_support.hpp"

namespace blockscope {
namespace {

std::string rule_of(std::string_view text) {
  try {
    parse_netlist(text);
  } catch (const Error& e) {
    return e.rule();
  }
  return "ok";
}

std::string message_of(std::string_view text) {
  try {
    parse_netlist(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "ok";
}

std::string profile_rule_of(std::string_view text) {
  try {
    parse_profile(text);
  } catch (const Error& e) {
    return e.rule();
  }
  return "ok";
}

constexpr std::string_view kHeader = "blockscope-netlist v1\n";

TEST(ParseNetlistTest, MinimalDocument) {
  const NetlistDocument doc = parse_netlist(
      "blockscope-netlist v1\n"
      "# a comment\n"
      "\n"
      "cell in0 IN 0\n"
      "cell blk__l LUT1 120   # trailing comment\n"
      "cell out0 OUT 0\n"
      "net in0 -> blk__l 30\n"
      "net blk__l -> out0 40\n");
  EXPECT_EQ(doc.version, "v1");
  ASSERT_EQ(doc.body.cells.size(), 3u);
  EXPECT_EQ(doc.body.cells[1], (Cell{"blk__l", CellKind::LUT1, 120}));
  EXPECT_EQ(doc.body.nets[1], (Net{"blk__l", "out0", 40}));
  EXPECT_EQ(doc.cell_lines.at("in0"), 4u);
  EXPECT_EQ(doc.net_lines.at({"in0", "blk__l"}), 7u);
}

TEST(ParseNetlistTest, HeaderRequired) {
  EXPECT_EQ(rule_of(""), "missing-header");
  EXPECT_EQ(rule_of("cell a IN 0\n"), "missing-header");
  EXPECT_EQ(rule_of("blockscope-netlist v2\n"), "version-mismatch");
}

TEST(ParseNetlistTest, UnknownKindNamesLineAndColumn) {
  const std::string text = std::string(kHeader) + "cell a LUT9 3\n";
  EXPECT_EQ(rule_of(text), "unknown-kind");
  EXPECT_EQ(message_of(text), "unknown cell kind LUT9 at line 2, column 8");
}

TEST(ParseNetlistTest, LexicalErrors) {
  EXPECT_EQ(rule_of(std::string(kHeader) + "cell a IN\n"), "lexical");
  EXPECT_EQ(rule_of(std::string(kHeader) + "cell 9a IN 0\n"), "lexical");
  EXPECT_EQ(rule_of(std::string(kHeader) + "cell a LUT1 x\n"), "lexical");
  EXPECT_EQ(rule_of(std::string(kHeader) + "cell a IN 0\ncell b OUT 0\nnet a => b 0\n"), "lexical");
  EXPECT_EQ(rule_of(std::string(kHeader) + "wire a b\n"), "unknown-directive");
}

TEST(ParseNetlistTest, NegativeDelayRule) {
  EXPECT_EQ(rule_of(std::string(kHeader) + "cell a LUT1 -4\n"), "negative-delay");
}

TEST(ParseNetlistTest, DuplicatesAndSemanticErrorsCarryLines) {
  EXPECT_EQ(rule_of(std::string(kHeader) + "cell a IN 0\ncell a IN 0\n"), "duplicate-cell-id");
  const std::string dup_net = std::string(kHeader) + "cell a IN 0\ncell b OUT 0\nnet a -> b 1\nnet a -> b 2\n";
  EXPECT_EQ(rule_of(dup_net), "duplicate-net");
  EXPECT_NE(message_of(dup_net).find("line 5"), std::string::npos);

  const std::string dangling = std::string(kHeader) + "cell a IN 0\nnet a -> ghost 1\n";
  EXPECT_EQ(rule_of(dangling), "dangling-reference");
  EXPECT_NE(message_of(dangling).find("line 3"), std::string::npos);

  const std::string pair = std::string(kHeader) + "cell d FF_D 0\nffpair d q\n";
  EXPECT_EQ(rule_of(pair), "ffpair-dangling");
  EXPECT_NE(message_of(pair).find("line 3"), std::string::npos);
}

TEST(ParseNetlistTest, CycleMessageListsCells) {
  const std::string text = std::string(kHeader) +
                           "cell q IN 0\ncell u LUT2 1\ncell v LUT1 1\n"
                           "net q -> u 0\nnet u -> v 0\nnet v -> u 0\n";
  EXPECT_EQ(rule_of(text), "combinational-cycle");
  EXPECT_NE(message_of(text).find("{u, v}"), std::string::npos);
}

TEST(ParseNetlistTest, CrlfAndTabsAccepted) {
  const Netlist n = parse_netlist("blockscope-netlist v1\r\ncell\ta\tIN\t0\r\n").body;
  ASSERT_EQ(n.cells.size(), 1u);
  EXPECT_EQ(n.cells[0].id, "a");
}

TEST(SerializeNetlistTest, CanonicalOutput) {
  const Netlist n = testing::netlist_of("cell z OUT 0\ncell a IN 0\nnet a -> z 5\n");
  EXPECT_EQ(serialize_netlist(n), "blockscope-netlist v1\ncell a IN 0\ncell z OUT 0\nnet a -> z 5\n");
}

TEST(NetlistRoundTripTest, Fixtures) {
  for (const Netlist& n : {gen_gcd(1).netlist, gen_gcd(4).netlist, gen_gcd(8).netlist, gen_fig6()}) {
    const std::string text = serialize_netlist(n);
    const Netlist back = parse_netlist(text).body;
    EXPECT_TRUE(equivalent(back, n));
    EXPECT_EQ(serialize_netlist(back), text);
  }
}

TEST(NetlistRoundTripTest, RandomInstances) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Netlist n = gen_random(seed, 2 + seed % 60);
    const Netlist back = parse_netlist(serialize_netlist(n)).body;
    ASSERT_TRUE(equivalent(back, n)) << "seed " << seed;
  }
}

// Replacing any single id, kind or delay token by a token of a different
// lexical class must be rejected.
TEST(ParseNetlistTest, StrictnessUnderTokenCorruption) {
  const std::string text = serialize_netlist(gen_fig6());
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  std::size_t checked = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream words(lines[i]);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      if (tokens[t] == "->") continue;
      const bool numeric = std::isdigit(static_cast<unsigned char>(tokens[t][0])) != 0;
      for (const std::string& replacement : {std::string(numeric ? "LUT1" : "7"), std::string("-1"), std::string("a,b")}) {
        std::vector<std::string> mutated = tokens;
        mutated[t] = replacement;
        std::string doc;
        for (std::size_t j = 0; j < lines.size(); ++j) {
          if (j != i) {
            doc += lines[j] + "\n";
            continue;
          }
          for (std::size_t k = 0; k < mutated.size(); ++k) doc += (k ? " " : "") + mutated[k];
          doc += "\n";
        }
        EXPECT_NE(rule_of(doc), "ok") << doc;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100u);
}

constexpr std::string_view kGcdProfile =
    "cycles 10\n"
    "rule swap block swap\n"
    "rule subtract block subtract\n"
    "fires swap 1,3\n"
    "fires subtract 2,4,5\n"
    "writes swap x\n"
    "writes swap y\n"
    "writes subtract y\n"
    "reads subtract x\n"
    "reads subtract y\n";

TEST(ParseProfileTest, HeaderIsOptional) {
  const ActivityProfile p = parse_profile(kGcdProfile);
  EXPECT_EQ(p.cycles, 10u);
  EXPECT_EQ(p.rule_block.at("swap"), testing::L("swap"));
  EXPECT_EQ(p.firings.at("subtract"), (std::vector<Cycle>{2, 4, 5}));
  EXPECT_EQ(p.writes.size(), 3u);
  EXPECT_EQ(p.reads.size(), 2u);
  EXPECT_EQ(parse_profile("blockscope-profile v1\n" + std::string(kGcdProfile)), p);
  EXPECT_EQ(profile_rule_of("blockscope-profile v9\ncycles 1\n"), "version-mismatch");
}

TEST(ParseProfileTest, Errors) {
  EXPECT_EQ(profile_rule_of("cycles 10\nrule r block b\nfires r 3,12\n"), "cycle-out-of-range");
  EXPECT_EQ(profile_rule_of("cycles 0\n"), "empty-trace");
  EXPECT_EQ(profile_rule_of("rule r block b\n"), "missing-cycles");
  EXPECT_EQ(profile_rule_of("cycles 3\ncycles 4\n"), "duplicate-cycles");
  EXPECT_EQ(profile_rule_of("cycles 5\nrule r block b\nrule r block c\n"), "duplicate-rule");
  EXPECT_EQ(profile_rule_of("cycles 5\nrule r block b\nfires r 3,1\n"), "unsorted-firings");
  EXPECT_EQ(profile_rule_of("cycles 5\nrule r block b\nfires r 1,1\n"), "unsorted-firings");
  EXPECT_EQ(profile_rule_of("cycles 5\nrule r block b\nfires r 1\nfires r 2\n"), "duplicate-fires");
  EXPECT_EQ(profile_rule_of("cycles 5\nfires r 1\n"), "undeclared-rule");
  EXPECT_EQ(profile_rule_of("cycles 5\nrule r block b\nwrites r s\nreads c s\n"), "undeclared-block");
  EXPECT_EQ(profile_rule_of("cycles 5\nrule r block b\nreads b s\n"), "undeclared-state");
  EXPECT_EQ(profile_rule_of("cycles 5\nrule r block b\nfires r -1\n"), "negative-value");
  EXPECT_EQ(profile_rule_of("cycles 5\nbogus\n"), "unknown-directive");
}

TEST(ParseProfileTest, OutOfRangeMessage) {
  try {
    parse_profile("cycles 10\nrule r block b\nfires r 3,12\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()), "cycle 12 out of range (cycles 10) at line 3, column 11");
  }
}

TEST(ProfileRoundTripTest, FixturesAndRandom) {
  const ActivityProfile gcd = gen_gcd(4).profile;
  EXPECT_EQ(parse_profile(serialize_profile(gcd)), gcd);
  const std::vector<BlockLabel> blocks = {testing::L("alu"), testing::L("ctl"), testing::L("mem.rd")};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const ActivityProfile p = gen_random_profile(seed, blocks);
    const std::string text = serialize_profile(p);
    const ActivityProfile back = parse_profile(text);
    ASSERT_EQ(serialize_profile(back), text) << "seed " << seed;
    ASSERT_EQ(back, p) << "seed " << seed;
  }
}

}  // namespace
}  // namespace blockscope
