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

// Anchor tests for the TSG table. Every other suite depends on this one
// through a ctest fixture and is skipped if it fails.

#include <set>

#include "gtest/gtest.h"
#include "revlogic/gate.hpp"

namespace revlogic {
namespace {

TEST(TsgBootstrap, TableIsAPermutationOfSixteenStates) {
  const Gate& tsg = standard_gate(GateKind::Tsg);
  ASSERT_EQ(tsg.table().size(), 16u);
  std::set<int> images(tsg.table().begin(), tsg.table().end());
  EXPECT_EQ(images.size(), 16u);
  EXPECT_TRUE(is_bijective_table(tsg.table(), 4));
}

TEST(TsgBootstrap, ConstantZeroOnPortCGivesAFullAdder) {
  const Gate& tsg = standard_gate(GateKind::Tsg);
  for (Bit a = 0; a < 2; ++a) {
    for (Bit b = 0; b < 2; ++b) {
      for (Bit cin = 0; cin < 2; ++cin) {
        const auto out = tsg.eval({a, b, 0, cin});
        const int total = a + b + cin;
        EXPECT_EQ(out[2], total % 2) << "sum for " << int(a) << int(b) << int(cin);
        EXPECT_EQ(out[3], total / 2) << "carry for " << int(a) << int(b) << int(cin);
      }
    }
  }
}

}  // namespace
}  // namespace revlogic
