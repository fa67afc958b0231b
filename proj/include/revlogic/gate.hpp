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

/// @file gate.hpp
/// @brief Reversible gate primitives stored as explicit permutation tables.
///
/// Port encoding: the first port (A) is the most significant bit of a table
/// index and the last port is the least significant bit. For a 4-line gate the
/// input (A,B,C,D) = (1,0,1,1) therefore has code 0b1011 = 11.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "revlogic/errors.hpp"

namespace revlogic {

enum class GateKind : std::uint8_t { Tsg, Fredkin, Toffoli, Feynman, Not };

inline constexpr std::array<GateKind, 5> kAllGateKinds = {
    GateKind::Tsg, GateKind::Fredkin, GateKind::Toffoli, GateKind::Feynman, GateKind::Not};

inline constexpr std::size_t kMaxGateArity = 4;

[[nodiscard]] constexpr std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::Tsg:
      return 4;
    case GateKind::Fredkin:
    case GateKind::Toffoli:
      return 3;
    case GateKind::Feynman:
      return 2;
    case GateKind::Not:
      return 1;
  }
  return 0;
}

/// Lower-case name used in netlists ("tsg", "fredkin", ...).
[[nodiscard]] constexpr std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::Tsg:
      return "tsg";
    case GateKind::Fredkin:
      return "fredkin";
    case GateKind::Toffoli:
      return "toffoli";
    case GateKind::Feynman:
      return "feynman";
    case GateKind::Not:
      return "not";
  }
  return "unknown";
}

/// Upper-case name used in metric keys ("TSG", "FREDKIN", ...).
[[nodiscard]] constexpr std::string_view gate_label(GateKind kind) {
  switch (kind) {
    case GateKind::Tsg:
      return "TSG";
    case GateKind::Fredkin:
      return "FREDKIN";
    case GateKind::Toffoli:
      return "TOFFOLI";
    case GateKind::Feynman:
      return "FEYNMAN";
    case GateKind::Not:
      return "NOT";
  }
  return "UNKNOWN";
}

[[nodiscard]] inline std::optional<GateKind> parse_gate_kind(std::string_view name) {
  for (GateKind kind : kAllGateKinds) {
    if (gate_name(kind) == name) return kind;
  }
  return std::nullopt;
}

using Bit = std::uint8_t;

namespace detail {

// Defining Boolean equations, one per gate kind. Inputs and outputs are in
// port order.

constexpr std::array<Bit, 4> tsg_equations(Bit a, Bit b, Bit c, Bit d) {
  const Bit q = static_cast<Bit>(((a ^ 1) & (c ^ 1)) ^ (b ^ 1));
  const Bit r = static_cast<Bit>(q ^ d);
  const Bit s = static_cast<Bit>((q & d) ^ ((a & b) ^ c));
  return {a, q, r, s};
}

constexpr std::array<Bit, 3> fredkin_equations(Bit a, Bit b, Bit c) {
  const Bit q = static_cast<Bit>(((a ^ 1) & b) ^ (a & c));
  const Bit r = static_cast<Bit>(((a ^ 1) & c) ^ (a & b));
  return {a, q, r};
}

constexpr std::array<Bit, 3> toffoli_equations(Bit a, Bit b, Bit c) {
  return {a, b, static_cast<Bit>((a & b) ^ c)};
}

constexpr std::array<Bit, 2> feynman_equations(Bit a, Bit b) {
  return {a, static_cast<Bit>(a ^ b)};
}

constexpr Bit bit_of(std::uint32_t code, std::size_t port, std::size_t arity) {
  return static_cast<Bit>((code >> (arity - 1 - port)) & 1U);
}

template <std::size_t N>
constexpr std::uint8_t encode_ports(const std::array<Bit, N>& bits) {
  std::uint32_t code = 0;
  for (Bit b : bits) code = (code << 1) | (b & 1U);
  return static_cast<std::uint8_t>(code);
}

inline std::vector<std::uint8_t> equation_table(GateKind kind) {
  const std::size_t k = gate_arity(kind);
  std::vector<std::uint8_t> table(std::size_t{1} << k);
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    auto in = [&](std::size_t port) { return bit_of(x, port, k); };
    switch (kind) {
      case GateKind::Tsg:
        table[x] = encode_ports(tsg_equations(in(0), in(1), in(2), in(3)));
        break;
      case GateKind::Fredkin:
        table[x] = encode_ports(fredkin_equations(in(0), in(1), in(2)));
        break;
      case GateKind::Toffoli:
        table[x] = encode_ports(toffoli_equations(in(0), in(1), in(2)));
        break;
      case GateKind::Feynman:
        table[x] = encode_ports(feynman_equations(in(0), in(1)));
        break;
      case GateKind::Not:
        table[x] = static_cast<std::uint8_t>(x ^ 1U);
        break;
    }
  }
  return table;
}

}  // namespace detail

/// True iff `table` is a permutation of {0, ..., 2^k - 1}.
template <class Int>
[[nodiscard]] bool is_bijective_table(std::span<const Int> table, std::size_t k) {
  if (k >= 8 * sizeof(std::size_t) || table.size() != (std::size_t{1} << k)) {
    throw usage_error("table length " + std::to_string(table.size()) +
                      " does not match 2^" + std::to_string(k));
  }
  std::vector<bool> seen(table.size(), false);
  for (Int v : table) {
    if constexpr (std::is_signed_v<Int>) {
      if (v < 0) return false;
    }
    const auto idx = static_cast<std::size_t>(v);
    if (idx >= table.size() || seen[idx]) return false;
    seen[idx] = true;
  }
  return true;
}

template <class Int>
[[nodiscard]] bool is_bijective_table(const std::vector<Int>& table, std::size_t k) {
  return is_bijective_table(std::span<const Int>(table), k);
}

/// A k-line reversible primitive. Immutable after construction.
class Gate {
 public:
  /// Builds the gate from its defining equations.
  [[nodiscard]] static Gate make_standard(GateKind kind) {
    return Gate(kind, detail::equation_table(kind), false);
  }

  [[nodiscard]] GateKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t arity() const noexcept { return gate_arity(kind_); }
  [[nodiscard]] bool is_inverse() const noexcept { return inverted_; }
  [[nodiscard]] std::span<const std::uint8_t> table() const noexcept { return table_; }

  [[nodiscard]] std::uint8_t apply(std::uint32_t code) const { return table_.at(code); }

  /// Evaluates the gate on port-ordered bits.
  [[nodiscard]] std::vector<Bit> eval(std::span<const Bit> bits) const {
    if (bits.size() != arity()) {
      throw usage_error("gate " + std::string(gate_name(kind_)) + " expects " +
                        std::to_string(arity()) + " bits, got " + std::to_string(bits.size()));
    }
    std::uint32_t code = 0;
    for (Bit b : bits) {
      if (b > 1) throw usage_error("bit values must be 0 or 1");
      code = (code << 1) | b;
    }
    const std::uint32_t out = table_[code];
    std::vector<Bit> result(arity());
    for (std::size_t p = 0; p < arity(); ++p) result[p] = detail::bit_of(out, p, arity());
    return result;
  }

  [[nodiscard]] std::vector<Bit> eval(std::initializer_list<Bit> bits) const {
    return eval(std::span<const Bit>(bits.begin(), bits.size()));
  }

  /// Gate realising the inverse permutation.
  [[nodiscard]] Gate inverse() const {
    std::vector<std::uint8_t> inv(table_.size());
    for (std::size_t x = 0; x < table_.size(); ++x) inv[table_[x]] = static_cast<std::uint8_t>(x);
    return Gate(kind_, std::move(inv), !inverted_);
  }

 private:
  Gate(GateKind kind, std::vector<std::uint8_t> table, bool inverted)
      : kind_(kind), inverted_(inverted), table_(std::move(table)) {}

  GateKind kind_;
  bool inverted_;
  std::vector<std::uint8_t> table_;
};

[[nodiscard]] inline Gate make_standard_gate(GateKind kind) { return Gate::make_standard(kind); }

[[nodiscard]] inline std::vector<Bit> eval_gate(const Gate& g, std::span<const Bit> bits) {
  return g.eval(bits);
}

[[nodiscard]] inline Gate gate_inverse(const Gate& g) { return g.inverse(); }

/// Shared immutable instance of a standard gate.
[[nodiscard]] inline const Gate& standard_gate(GateKind kind) {
  static const std::array<Gate, 5> gates = {
      Gate::make_standard(GateKind::Tsg), Gate::make_standard(GateKind::Fredkin),
      Gate::make_standard(GateKind::Toffoli), Gate::make_standard(GateKind::Feynman),
      Gate::make_standard(GateKind::Not)};
  return gates[static_cast<std::size_t>(kind)];
}

[[nodiscard]] inline const Gate& standard_inverse_gate(GateKind kind) {
  static const std::array<Gate, 5> gates = {
      standard_gate(GateKind::Tsg).inverse(), standard_gate(GateKind::Fredkin).inverse(),
      standard_gate(GateKind::Toffoli).inverse(), standard_gate(GateKind::Feynman).inverse(),
      standard_gate(GateKind::Not).inverse()};
  return gates[static_cast<std::size_t>(kind)];
}

}  // namespace revlogic
