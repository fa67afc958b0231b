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

/// @file arith.hpp
/// @brief Generators for TSG-based arithmetic: full/half adders, the 4:2
/// compressor, ripple-carry adders, the Fredkin partial-product array and the
/// reversible Wallace tree multiplier.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "revlogic/analysis.hpp"
#include "revlogic/circuit.hpp"
#include "revlogic/errors.hpp"
#include "revlogic/gate.hpp"

namespace revlogic {

/// A live signal together with its arithmetic weight (bit position).
struct WeightedLine {
  LineIndex line;
  unsigned weight;
};

namespace cells {

struct SumCarry {
  LineIndex sum;
  LineIndex carry;
};

struct CompressorOut {
  LineIndex sum;    // weight j
  LineIndex carry;  // weight j+1
  LineIndex cout;   // weight j+1, independent of cin
};

/// TSG(a, b, 0, cin): R = a^b^cin lands on the fresh constant, S = carry on
/// the cin line.
inline SumCarry full_adder(Circuit& c, LineIndex a, LineIndex b, LineIndex cin) {
  const LineIndex zero = c.add_line(LineRole::constant(0));
  c.append_gate(GateKind::Tsg, {a, b, zero, cin});
  return {zero, cin};
}

/// TSG(a, b, 0, 0): R = a^b, S = a&b.
inline SumCarry half_adder(Circuit& c, LineIndex a, LineIndex b) {
  const LineIndex r = c.add_line(LineRole::constant(0));
  const LineIndex s = c.add_line(LineRole::constant(0));
  c.append_gate(GateKind::Tsg, {a, b, r, s});
  return {r, s};
}

/// Two chained TSG full adders. Cout depends only on x1..x3, so it may feed
/// the cin of the neighbouring compressor without a carry ripple.
inline CompressorOut compressor_4_2(Circuit& c, LineIndex x1, LineIndex x2, LineIndex x3,
                                    LineIndex x4, LineIndex cin) {
  const SumCarry first = full_adder(c, x1, x2, x3);
  const SumCarry second = full_adder(c, first.sum, x4, cin);
  return {second.sum, second.carry, first.carry};
}

}  // namespace cells

[[nodiscard]] inline Circuit gen_full_adder() {
  Circuit c{LineRole::input("A"), LineRole::input("B"), LineRole::constant(0),
            LineRole::input("Cin")};
  c.append_gate(GateKind::Tsg, {0, 1, 2, 3});
  c.set_output(2, "Sum", 0);
  c.set_output(3, "Cout", 1);
  return c;
}

[[nodiscard]] inline Circuit gen_half_adder() {
  Circuit c{LineRole::input("A"), LineRole::input("B"), LineRole::constant(0),
            LineRole::constant(0)};
  c.append_gate(GateKind::Tsg, {0, 1, 2, 3});
  c.set_output(2, "Sum", 0);
  c.set_output(3, "Carry", 1);
  return c;
}

/// Lines: x1 x2 0 x3 x4 0 cin. Sum on line 5, Carry on line 6, Cout on line 3.
[[nodiscard]] inline Circuit gen_compressor_4_2() {
  Circuit c{LineRole::input("x1"), LineRole::input("x2"),  LineRole::constant(0),
            LineRole::input("x3"), LineRole::input("x4"),  LineRole::constant(0),
            LineRole::input("cin")};
  c.append_gate(GateKind::Tsg, {0, 1, 2, 3});
  c.append_gate(GateKind::Tsg, {2, 4, 5, 6});
  c.set_output(5, "Sum", 0);
  c.set_output(6, "Carry", 1);
  c.set_output(3, "Cout", 1);
  return c;
}

/// n chained TSG full adders. Lines: a_i b_i 0 per stage, then cin; the carry
/// threads through the cin line and leaves as cout.
[[nodiscard]] inline Circuit gen_ripple_adder(std::size_t n) {
  if (n == 0) throw usage_error("ripple adder width must be at least 1");
  std::vector<LineRole> roles;
  for (std::size_t i = 0; i < n; ++i) {
    roles.push_back(LineRole::input("a" + std::to_string(i)));
    roles.push_back(LineRole::input("b" + std::to_string(i)));
    roles.push_back(LineRole::constant(0));
  }
  roles.push_back(LineRole::input("cin"));
  Circuit c(std::move(roles));
  const auto carry = static_cast<LineIndex>(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto base = static_cast<LineIndex>(3 * i);
    c.append_gate(GateKind::Tsg, {base, base + 1, base + 2, carry});
    c.set_output(base + 2, "s" + std::to_string(i), static_cast<int>(i));
  }
  c.set_output(carry, "cout", static_cast<int>(n));
  return c;
}

/// Line carrying a_i AND b_j, at weight i + j.
struct PartialProductGrid {
  std::size_t n = 0;
  std::vector<LineIndex> lines;  // row-major, index i * n + j

  [[nodiscard]] LineIndex at(std::size_t i, std::size_t j) const { return lines.at(i * n + j); }
};

struct PartialProducts {
  Circuit circuit;
  PartialProductGrid grid;
};

namespace detail {

/// Emits the Fredkin AND array on existing operand lines. Each b_j is copied
/// n-1 times by Feynman gates onto fresh ancillas; copy i feeds row i. Each
/// a_i is the control of its whole row and passes through unchanged.
inline PartialProductGrid emit_partial_products(Circuit& c, const std::vector<LineIndex>& a,
                                                const std::vector<LineIndex>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<LineIndex>> b_copies(n);
  for (std::size_t j = 0; j < n; ++j) {
    b_copies[j].push_back(b[j]);
    for (std::size_t i = 1; i < n; ++i) {
      const LineIndex copy = c.add_line(LineRole::constant(0));
      c.append_gate(GateKind::Feynman, {b[j], copy});
      b_copies[j].push_back(copy);
    }
  }
  PartialProductGrid grid{n, std::vector<LineIndex>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const LineIndex product = c.add_line(LineRole::constant(0));
      c.append_gate(GateKind::Fredkin, {a[i], b_copies[j][i], product});
      grid.lines[i * n + j] = product;
    }
  }
  return grid;
}

inline Circuit operand_circuit(std::size_t n) {
  std::vector<LineRole> roles;
  for (std::size_t i = 0; i < n; ++i) roles.push_back(LineRole::input("a" + std::to_string(i)));
  for (std::size_t i = 0; i < n; ++i) roles.push_back(LineRole::input("b" + std::to_string(i)));
  return Circuit(std::move(roles));
}

}  // namespace detail

/// Standalone partial-product array; product lines are labelled pp<i>_<j>.
[[nodiscard]] inline PartialProducts gen_partial_products(std::size_t n) {
  if (n == 0) throw usage_error("partial product width must be at least 1");
  Circuit c = detail::operand_circuit(n);
  std::vector<LineIndex> a(n);
  std::vector<LineIndex> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = static_cast<LineIndex>(i);
    b[i] = static_cast<LineIndex>(n + i);
  }
  PartialProductGrid grid = detail::emit_partial_products(c, a, b);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      c.set_output(grid.at(i, j), "pp" + std::to_string(i) + "_" + std::to_string(j),
                   static_cast<int>(i + j));
    }
  }
  return {std::move(c), std::move(grid)};
}

/// A row of bits, at most one per weight.
using BitRow = std::map<unsigned, LineIndex>;

/// Live bits between two phases of the multiplier.
struct StageSnapshot {
  std::vector<BitRow> rows;
  /// Gates emitted when the snapshot was taken; its lines hold these bits
  /// after exactly this many gates.
  std::size_t gate_end = 0;

  [[nodiscard]] std::vector<WeightedLine> bits() const {
    std::vector<WeightedLine> out;
    for (const auto& row : rows) {
      for (const auto& [w, l] : row) out.push_back({l, w});
    }
    return out;
  }
  [[nodiscard]] std::size_t max_column_height() const {
    std::map<unsigned, std::size_t> height;
    std::size_t best = 0;
    for (const auto& row : rows) {
      for (const auto& [w, l] : row) best = std::max(best, ++height[w]);
    }
    return best;
  }
};

struct WallaceMultiplier {
  Circuit circuit;
  PartialProductGrid grid;
  /// snapshots[0] is the partial-product array; snapshots[k] follows reduction
  /// stage k. The last snapshot has at most two rows and feeds the final adder.
  std::vector<StageSnapshot> snapshots;

  [[nodiscard]] std::size_t reduction_stages() const { return snapshots.size() - 1; }
};

namespace detail {

/// Reduces one group of up to four rows to a sum row and a carry row.
///
/// Columns are walked from low to high weight. A column holding t bits
/// (its own bits first, oldest row first, then the Cout arriving from the
/// column below) becomes:
///   t=1 pass-through, t=2 half adder, t=3 full adder,
///   t=4 4:2 compressor with cin tied to a fresh 0,
///   t=5 4:2 compressor.
/// Sum stays at weight w, Carry moves to w+1 and Cout enters the next column.
inline std::pair<BitRow, BitRow> reduce_group(Circuit& c, std::span<const BitRow> group) {
  BitRow sums;
  BitRow carries;
  unsigned top = 0;
  for (const auto& row : group) {
    if (!row.empty()) top = std::max(top, row.rbegin()->first);
  }
  std::optional<LineIndex> incoming;
  for (unsigned w = 0; w <= top || incoming; ++w) {
    std::vector<LineIndex> bits;
    for (const auto& row : group) {
      if (auto it = row.find(w); it != row.end()) bits.push_back(it->second);
    }
    if (incoming) bits.push_back(*incoming);
    incoming.reset();

    switch (bits.size()) {
      case 0:
        break;
      case 1:
        sums[w] = bits[0];
        break;
      case 2: {
        auto out = cells::half_adder(c, bits[0], bits[1]);
        sums[w] = out.sum;
        carries[w + 1] = out.carry;
        break;
      }
      case 3: {
        auto out = cells::full_adder(c, bits[0], bits[1], bits[2]);
        sums[w] = out.sum;
        carries[w + 1] = out.carry;
        break;
      }
      case 4:
      case 5: {
        const LineIndex cin =
            bits.size() == 5 ? bits[4] : c.add_line(LineRole::constant(0));
        auto out = cells::compressor_4_2(c, bits[0], bits[1], bits[2], bits[3], cin);
        sums[w] = out.sum;
        carries[w + 1] = out.carry;
        incoming = out.cout;
        break;
      }
      default:
        throw std::logic_error("column group holds more than five bits");
    }
  }
  return {std::move(sums), std::move(carries)};
}

}  // namespace detail

/// N x N reversible Wallace tree multiplier: Fredkin partial products, stages
/// of four-rows-at-a-time reduction until two rows remain, then a TSG ripple
/// adder producing P0 .. P(2n-1).
[[nodiscard]] inline WallaceMultiplier build_wallace_multiplier(std::size_t n) {
  if (n < 2) throw usage_error("multiplier width must be at least 2");
  if (n > 32) throw usage_error("multiplier width must be at most 32");
  Circuit c = detail::operand_circuit(n);
  std::vector<LineIndex> a(n);
  std::vector<LineIndex> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = static_cast<LineIndex>(i);
    b[i] = static_cast<LineIndex>(n + i);
  }
  PartialProductGrid grid = detail::emit_partial_products(c, a, b);

  std::vector<StageSnapshot> snapshots(1);
  for (std::size_t i = 0; i < n; ++i) {
    BitRow row;
    for (std::size_t j = 0; j < n; ++j) row[static_cast<unsigned>(i + j)] = grid.at(i, j);
    snapshots[0].rows.push_back(std::move(row));
  }
  snapshots[0].gate_end = c.gate_count();

  while (snapshots.back().rows.size() > 2) {
    const auto& rows = snapshots.back().rows;
    StageSnapshot next;
    for (std::size_t g = 0; g < rows.size(); g += 4) {
      const std::size_t size = std::min<std::size_t>(4, rows.size() - g);
      std::span<const BitRow> group(rows.data() + g, size);
      if (size <= 2) {
        next.rows.insert(next.rows.end(), group.begin(), group.end());
        continue;
      }
      auto [sums, carries] = detail::reduce_group(c, group);
      next.rows.push_back(std::move(sums));
      if (!carries.empty()) next.rows.push_back(std::move(carries));
    }
    next.gate_end = c.gate_count();
    snapshots.push_back(std::move(next));
  }

  // Final ripple adder over the last two rows.
  const auto& last = snapshots.back().rows;
  std::optional<LineIndex> carry;
  for (unsigned w = 0; w < 2 * n; ++w) {
    std::vector<LineIndex> bits;
    for (const auto& row : last) {
      if (auto it = row.find(w); it != row.end()) bits.push_back(it->second);
    }
    if (carry) bits.push_back(*carry);
    carry.reset();
    LineIndex product_bit = 0;
    switch (bits.size()) {
      case 0:
        product_bit = c.add_line(LineRole::constant(0));
        break;
      case 1:
        product_bit = bits[0];
        break;
      case 2: {
        auto out = cells::half_adder(c, bits[0], bits[1]);
        product_bit = out.sum;
        carry = out.carry;
        break;
      }
      case 3: {
        auto out = cells::full_adder(c, bits[0], bits[1], bits[2]);
        product_bit = out.sum;
        carry = out.carry;
        break;
      }
      default:
        throw std::logic_error("final adder column holds more than three bits");
    }
    c.set_output(product_bit, "P" + std::to_string(w), static_cast<int>(w));
  }
  // A carry out of the top column is always 0 for an n x n product; its line
  // stays garbage.

  return {std::move(c), std::move(grid), std::move(snapshots)};
}

[[nodiscard]] inline Circuit gen_wallace_multiplier(std::size_t n) {
  return build_wallace_multiplier(n).circuit;
}

// ---------------------------------------------------------------------------
// Full-adder embeddings of a single TSG gate

enum class PortRole : std::uint8_t { OperandA, OperandB, CarryIn, Constant };

struct FaEmbedding {
  std::array<PortRole, 4> inputs;  // role placed on ports A, B, C, D
  Bit constant_value = 0;
  std::size_t sum_port = 0;
  std::size_t carry_port = 0;

  [[nodiscard]] std::size_t constant_port() const {
    return static_cast<std::size_t>(std::find(inputs.begin(), inputs.end(), PortRole::Constant) -
                                    inputs.begin());
  }

  friend bool operator==(const FaEmbedding&, const FaEmbedding&) = default;
};

/// Every way of placing (a, b, cin) and one constant on the TSG inputs, and
/// picking two outputs, under which the gate computes a full adder.
[[nodiscard]] inline std::vector<FaEmbedding> find_fa_embeddings() {
  const Gate& tsg = standard_gate(GateKind::Tsg);
  std::array<PortRole, 4> roles = {PortRole::OperandA, PortRole::OperandB, PortRole::CarryIn,
                                   PortRole::Constant};
  std::sort(roles.begin(), roles.end());
  std::vector<FaEmbedding> found;
  do {
    for (Bit k = 0; k <= 1; ++k) {
      for (std::size_t sp = 0; sp < 4; ++sp) {
        for (std::size_t cp = 0; cp < 4; ++cp) {
          if (sp == cp) continue;
          bool ok = true;
          for (unsigned v = 0; v < 8 && ok; ++v) {
            const Bit a = (v >> 2) & 1U;
            const Bit b = (v >> 1) & 1U;
            const Bit ci = v & 1U;
            std::array<Bit, 4> in{};
            for (std::size_t p = 0; p < 4; ++p) {
              switch (roles[p]) {
                case PortRole::OperandA:
                  in[p] = a;
                  break;
                case PortRole::OperandB:
                  in[p] = b;
                  break;
                case PortRole::CarryIn:
                  in[p] = ci;
                  break;
                case PortRole::Constant:
                  in[p] = k;
                  break;
              }
            }
            const auto out = tsg.eval(std::span<const Bit>(in));
            const unsigned total = a + b + ci;
            ok = out[sp] == (total & 1U) && out[cp] == (total >> 1);
          }
          if (ok) found.push_back({roles, k, sp, cp});
        }
      }
    }
  } while (std::next_permutation(roles.begin(), roles.end()));
  return found;
}

/// Builds the 4-line circuit an embedding describes, with inputs named A, B,
/// Cin and outputs Sum/Cout, for re-verification.
[[nodiscard]] inline Circuit embedding_circuit(const FaEmbedding& e) {
  std::vector<LineRole> roles;
  for (PortRole r : e.inputs) {
    switch (r) {
      case PortRole::OperandA:
        roles.push_back(LineRole::input("A"));
        break;
      case PortRole::OperandB:
        roles.push_back(LineRole::input("B"));
        break;
      case PortRole::CarryIn:
        roles.push_back(LineRole::input("Cin"));
        break;
      case PortRole::Constant:
        roles.push_back(LineRole::constant(e.constant_value));
        break;
    }
  }
  Circuit c(std::move(roles));
  c.append_gate(GateKind::Tsg, {0, 1, 2, 3});
  c.set_output(static_cast<LineIndex>(e.sum_port), "Sum", 0);
  c.set_output(static_cast<LineIndex>(e.carry_port), "Cout", 1);
  return c;
}

}  // namespace revlogic
