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
#include <vector>

#include "gtest/gtest.h"
#include "revlogic/arith.hpp"
#include "revlogic/circuit.hpp"

namespace revlogic {
namespace {

Circuit fa_lines() {
  return Circuit{LineRole::input("A"), LineRole::input("B"), LineRole::constant(0),
                 LineRole::input("Cin")};
}

TEST(NewCircuit, Examples) {
  const Circuit c = new_circuit({LineRole::input("A"), LineRole::input("B"),
                                 LineRole::constant(0), LineRole::input("Cin")});
  EXPECT_EQ(c.line_count(), 4u);
  EXPECT_EQ(c.gate_count(), 0u);
  for (const auto& l : c.output_labels()) EXPECT_TRUE(l.garbage);

  const Circuit one = new_circuit({LineRole::constant(1)});
  EXPECT_EQ(one.line_count(), 1u);

  EXPECT_THROW((void)new_circuit({}), usage_error);
}

TEST(NewCircuit, RejectsDuplicateInputNames) {
  EXPECT_THROW((void)new_circuit({LineRole::input("A"), LineRole::input("A")}), validation_error);
  EXPECT_THROW((void)LineRole::constant(2), usage_error);
}

TEST(AppendGate, ValidApplication) {
  Circuit c = fa_lines();
  c.append_gate(GateKind::Tsg, {0, 1, 2, 3});
  EXPECT_EQ(c.gate_count(), 1u);
  EXPECT_EQ(c.gates()[0].kind, GateKind::Tsg);
}

TEST(AppendGate, DistinctValidationErrors) {
  Circuit c = fa_lines();
  auto kind_of = [&](GateKind k, std::initializer_list<LineIndex> lines) {
    try {
      c.append_gate(k, lines);
    } catch (const validation_error& e) {
      return e.kind();
    }
    ADD_FAILURE() << "expected a validation error";
    return validation_error::Kind::Other;
  };
  EXPECT_EQ(kind_of(GateKind::Feynman, {2, 2}), validation_error::Kind::DuplicateIndex);
  EXPECT_EQ(kind_of(GateKind::Toffoli, {0, 1, 7}), validation_error::Kind::OutOfRange);
  EXPECT_EQ(kind_of(GateKind::Tsg, {0, 1, 2}), validation_error::Kind::ArityMismatch);
  EXPECT_EQ(c.gate_count(), 0u);
}

TEST(AppendGate, FreeFunctionLeavesOriginalUntouched) {
  const Circuit c = fa_lines();
  const std::vector<LineIndex> lines{0, 1, 2, 3};
  const Circuit d = append_gate(c, GateKind::Tsg, lines);
  EXPECT_EQ(c.gate_count(), 0u);
  EXPECT_EQ(d.gate_count(), 1u);
}

TEST(AppendGate, GateCountGrowsByOne) {
  std::mt19937 rng(7);
  Circuit c{LineRole::input("a"), LineRole::input("b"), LineRole::input("c"),
            LineRole::input("d"), LineRole::constant(0)};
  for (int step = 0; step < 50; ++step) {
    const auto kind = kAllGateKinds[rng() % kAllGateKinds.size()];
    std::vector<LineIndex> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    perm.resize(gate_arity(kind));
    const std::size_t before = c.gate_count();
    c.append_gate(kind, perm);
    EXPECT_EQ(c.gate_count(), before + 1);
    EXPECT_EQ(c.gate_count(), c.gates().size());
  }
}

TEST(SetOutput, DuplicateNameRejected) {
  Circuit c = fa_lines();
  c.set_output(2, "Sum", 0);
  EXPECT_THROW(c.set_output(3, "Sum", 1), validation_error);
  c.set_output(2, "Sum", 0);  // relabelling the same line is fine
  c.set_garbage(2);
  c.set_output(3, "Sum", 1);
  EXPECT_EQ(c.output_lines(), std::vector<LineIndex>{3});
}

TEST(Simulate, FullAdderExample) {
  const Circuit fa = gen_full_adder();
  const Assignment out = simulate(fa, {{"A", 1}, {"B", 0}, {"Cin", 1}});
  EXPECT_EQ(out[2], 0);
  EXPECT_EQ(out[3], 1);

  const Assignment zero = simulate(fa, {{"A", 0}, {"B", 0}, {"Cin", 0}});
  EXPECT_EQ(zero[2], 0);
  EXPECT_EQ(zero[3], 0);
}

TEST(Simulate, CompressorAllOnes) {
  const Circuit c = gen_compressor_4_2();
  const Assignment out =
      simulate(c, {{"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 1}, {"cin", 1}});
  EXPECT_EQ(out[*c.find_output("Sum")], 1);
  EXPECT_EQ(out[*c.find_output("Carry")], 1);
  EXPECT_EQ(out[*c.find_output("Cout")], 1);
}

TEST(Simulate, ConstantsComeFromRoles) {
  Circuit c{LineRole::constant(1), LineRole::input("x")};
  c.append_gate(GateKind::Feynman, {0, 1});
  c.set_output(1, "y", 0);
  EXPECT_EQ(simulate(c, {{"x", 0}})[1], 1);
  EXPECT_EQ(simulate(c, {{"x", 1}})[1], 0);
}

TEST(Simulate, MissingOrUnknownInputs) {
  const Circuit fa = gen_full_adder();
  EXPECT_THROW((void)simulate(fa, {{"A", 1}, {"B", 0}}), usage_error);
  EXPECT_THROW((void)simulate(fa, {{"A", 1}, {"B", 0}, {"Cin", 1}, {"Z", 0}}), usage_error);
  EXPECT_THROW((void)simulate(fa, {{"A", 2}, {"B", 0}, {"Cin", 1}}), usage_error);
}

TEST(Simulate, IsPure) {
  const Circuit c = gen_wallace_multiplier(4);
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    InputValues in;
    for (const auto& name : c.input_names()) in[name] = static_cast<Bit>(rng() & 1U);
    EXPECT_EQ(simulate(c, in).bits, simulate(c, in).bits);
  }
}

TEST(RunInverse, RestoresRandomStates) {
  const std::vector<Circuit> circuits = {gen_full_adder(), gen_half_adder(), gen_compressor_4_2(),
                                         gen_ripple_adder(5), gen_partial_products(3).circuit,
                                         gen_wallace_multiplier(8)};
  std::mt19937_64 rng(11);
  for (const auto& c : circuits) {
    std::vector<Bit> state(c.line_count());
    for (int t = 0; t < 1000; ++t) {
      for (auto& b : state) b = static_cast<Bit>(rng() & 1U);
      const std::vector<Bit> original = state;
      c.run(state);
      c.run_inverse(state);
      ASSERT_EQ(state, original);
    }
  }
}

TEST(TruthTable, FullAdderMatchesBinaryAddition) {
  const TruthTable tt = truth_table(gen_full_adder());
  ASSERT_EQ(tt.rows.size(), 8u);
  EXPECT_EQ(tt.input_names, (std::vector<std::string>{"A", "B", "Cin"}));
  EXPECT_EQ(tt.output_names, (std::vector<std::string>{"Sum", "Cout"}));
  for (const auto& row : tt.rows) {
    const int total = row.inputs[0] + row.inputs[1] + row.inputs[2];
    EXPECT_EQ(row.outputs[0], total & 1);
    EXPECT_EQ(row.outputs[1], total >> 1);
    EXPECT_EQ(row.garbage.size(), 2u);
  }
  // Ascending input code, first input most significant.
  EXPECT_EQ(tt.rows[4].inputs, (std::vector<Bit>{1, 0, 0}));
}

TEST(TruthTable, EmptyCircuitIsIdentity) {
  Circuit c{LineRole::input("x")};
  c.set_output(0, "x", 0);
  const TruthTable tt = truth_table(c);
  ASSERT_EQ(tt.rows.size(), 2u);
  EXPECT_EQ(tt.rows[0].outputs, std::vector<Bit>{0});
  EXPECT_EQ(tt.rows[1].outputs, std::vector<Bit>{1});
}

TEST(TruthTable, CapExceeded) {
  std::vector<LineRole> roles;
  for (int i = 0; i < 25; ++i) roles.push_back(LineRole::input("x" + std::to_string(i)));
  const Circuit c(std::move(roles));
  EXPECT_THROW((void)truth_table(c), enumeration_cap_error);
  EXPECT_THROW((void)truth_table(gen_full_adder(), 2), enumeration_cap_error);
}

TEST(Reversibility, SmallCircuitsAreBijective) {
  EXPECT_TRUE(check_circuit_reversibility(gen_full_adder()));
  EXPECT_TRUE(check_circuit_reversibility(gen_compressor_4_2()));
  EXPECT_TRUE(check_circuit_reversibility(gen_ripple_adder(3)));
}

TEST(Reversibility, WideCircuitRefusesExhaustiveButPassesProbe) {
  const Circuit mul = gen_wallace_multiplier(8);
  EXPECT_THROW((void)check_circuit_reversibility(mul), enumeration_cap_error);
  EXPECT_TRUE(probe_injectivity(mul, 100000, 2026));
}

TEST(Reversibility, ProbeOnTinyCircuitCoversWholeSpace) {
  EXPECT_TRUE(probe_injectivity(gen_full_adder(), 1000, 1));
}

TEST(Lint, GeneratedCircuitsReadConstantsAtAncillaPorts) {
  for (const auto& c : {gen_full_adder(), gen_half_adder(), gen_compressor_4_2(),
                        gen_ripple_adder(4), gen_partial_products(4).circuit,
                        gen_wallace_multiplier(8)}) {
    EXPECT_TRUE(lint_constant_lines(c).empty());
  }
}

TEST(Lint, FlagsConstantOnDataPort) {
  Circuit c{LineRole::constant(0), LineRole::input("b"), LineRole::constant(0)};
  c.append_gate(GateKind::Fredkin, {0, 1, 2});
  EXPECT_EQ(lint_constant_lines(c).size(), 1u);
}

}  // namespace
}  // namespace revlogic
