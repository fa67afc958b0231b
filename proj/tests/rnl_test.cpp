// Copyright 2026 The revlogic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "revlogic/arith.hpp"
#include "revlogic/rnl.hpp"

namespace revlogic {
namespace {

constexpr const char* kFullAdderDoc =
    "lines 4\n"
    "input 0 A\n"
    "input 1 B\n"
    "const 2 0\n"
    "input 3 Cin\n"
    "gate tsg 0 1 2 3\n"
    "garbage 0\n"
    "garbage 1\n"
    "output 2 Sum 0\n"
    "output 3 Cout 1\n";

parse_error parse_failure(const std::string& text) {
  try {
    (void)parse_netlist(text);
  } catch (const parse_error& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return parse_error(0, 0, "");
}

TEST(ParseNetlist, FullAdderDocumentMatchesGenerator) {
  const Circuit c = parse_netlist(kFullAdderDoc);
  EXPECT_EQ(c.line_count(), 4u);
  EXPECT_EQ(c.gate_count(), 1u);
  EXPECT_EQ(c, gen_full_adder());
}

TEST(ParseNetlist, CommentsAndBlankLines) {
  const Circuit c = parse_netlist(
      "# full adder\n"
      "\n"
      "lines 4   # four lines\n"
      "input 0 A\ninput 1 B\n\tconst 2 0\ninput 3 Cin\r\n"
      "gate tsg 0 1 2 3\n"
      "output 2 Sum 0\noutput 3 Cout 1");
  EXPECT_EQ(c, gen_full_adder());
}

TEST(ParseNetlist, OutputWeightIsOptional) {
  const Circuit c = parse_netlist("lines 1\ninput 0 x\noutput 0 y\n");
  EXPECT_FALSE(c.label(0).weight.has_value());
  EXPECT_EQ(write_netlist(c), "lines 1\ninput 0 x\noutput 0 y\n");
}

TEST(ParseNetlist, ZeroLinesRejected) {
  const parse_error e = parse_failure("lines 0\n");
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 7u);
}

TEST(ParseNetlist, ArityMismatchWithLocation) {
  const parse_error e = parse_failure(
      "lines 4\ninput 0 A\ninput 1 B\nconst 2 0\ninput 3 Cin\ngate tsg 0 1 2\n");
  EXPECT_EQ(e.line(), 6u);
  EXPECT_NE(std::string(e.what()).find("takes 4"), std::string::npos) << e.what();
}

TEST(ParseNetlist, UnknownGateKind) {
  const parse_error e = parse_failure("lines 2\ninput 0 a\ninput 1 b\ngate cnot 0 1\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_EQ(e.column(), 6u);
}

TEST(ParseNetlist, DuplicateOutputLabel) {
  const parse_error e =
      parse_failure("lines 2\ninput 0 a\ninput 1 b\noutput 0 y\noutput 1 y\n");
  EXPECT_EQ(e.line(), 5u);
  EXPECT_EQ(e.column(), 10u);
}

TEST(ParseNetlist, OtherErrors) {
  EXPECT_EQ(parse_failure("input 0 a\n").line(), 1u);                       // before lines
  EXPECT_EQ(parse_failure("lines 2\ninput 0 a\n").line(), 1u);              // line 1 has no role
  EXPECT_EQ(parse_failure("lines 1\nconst 0 2\n").column(), 9u);            // bad constant
  EXPECT_EQ(parse_failure("lines 1\ninput 0 a\ninput 0 b\n").line(), 3u);   // role twice
  EXPECT_EQ(parse_failure("lines 1\ninput 5 a\n").column(), 7u);            // out of range
  EXPECT_EQ(parse_failure("lines 2\ninput 0 a\ninput 1 a\n").line(), 3u);   // duplicate input
  EXPECT_EQ(parse_failure("lines 2\ninput 0 a\ninput 1 b\ngate feynman 1 1\n").column(), 16u);
  EXPECT_EQ(parse_failure("lines 1\ninput 0 a\nwire 0\n").line(), 3u);      // unknown directive
  EXPECT_EQ(parse_failure("lines 1\nlines 1\n").line(), 2u);
  EXPECT_EQ(parse_failure("lines x\n").column(), 7u);
  EXPECT_EQ(parse_failure("lines 1\ninput 0 a\noutput 0 y -1\n").line(), 3u);
  EXPECT_EQ(parse_failure("lines 1\ninput 0 a\ngarbage 0\noutput 0 y\n").line(), 4u);
  EXPECT_EQ(parse_failure("# nothing\n").line(), 1u);
}

TEST(WriteNetlist, FullAdderIsCanonical) {
  const std::string text = write_netlist(gen_full_adder());
  EXPECT_EQ(text, kFullAdderDoc);
  std::size_t count = 0;
  for (std::size_t pos = 0; (pos = text.find("gate tsg 0 1 2 3\n", pos)) != std::string::npos;
       ++pos) {
    ++count;
  }
  EXPECT_EQ(count, 1u);
}

TEST(WriteNetlist, TrivialCircuit) {
  const Circuit c{LineRole::constant(1)};
  EXPECT_EQ(write_netlist(c), "lines 1\nconst 0 1\ngarbage 0\n");
}

TEST(WriteNetlist, CanonicalFixpoint) {
  for (const auto& c : {gen_full_adder(), gen_half_adder(), gen_compressor_4_2(),
                        gen_ripple_adder(3), gen_wallace_multiplier(4)}) {
    const std::string d = write_netlist(c);
    EXPECT_EQ(write_netlist(parse_netlist(d)), d);
  }
}

TEST(RoundTrip, StructureAndSimulationPreserved) {
  std::mt19937_64 rng(100);
  for (const auto& c : {gen_full_adder(), gen_half_adder(), gen_compressor_4_2(),
                        gen_ripple_adder(8), gen_partial_products(5).circuit,
                        gen_wallace_multiplier(8)}) {
    const Circuit back = parse_netlist(write_netlist(c));
    EXPECT_EQ(back, c);
    for (int t = 0; t < 100; ++t) {
      InputValues in;
      for (const auto& name : c.input_names()) in[name] = static_cast<Bit>(rng() & 1U);
      ASSERT_EQ(simulate(back, in).bits, simulate(c, in).bits);
    }
  }
}

}  // namespace
}  // namespace revlogic
