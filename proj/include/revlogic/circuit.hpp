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

/// @file circuit.hpp
/// @brief Cascade netlists: a fixed set of lines rewritten by an ordered
/// sequence of reversible gate applications.
///
/// Fan-out cannot be expressed in this model. A value can only be duplicated
/// by an explicit copy gate (Feynman onto a constant-0 line).

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "revlogic/errors.hpp"
#include "revlogic/gate.hpp"

namespace revlogic {

inline constexpr std::size_t kDefaultEnumerationCap = 24;

using LineIndex = std::uint32_t;

/// How a line enters the circuit.
struct LineRole {
  enum class Kind : std::uint8_t { PrimaryInput, Constant };

  Kind kind = Kind::Constant;
  std::string name;  // PrimaryInput only
  Bit value = 0;     // Constant only

  [[nodiscard]] static LineRole input(std::string name) {
    return LineRole{Kind::PrimaryInput, std::move(name), 0};
  }
  [[nodiscard]] static LineRole constant(Bit value) {
    if (value > 1) throw usage_error("constant value must be 0 or 1");
    return LineRole{Kind::Constant, {}, value};
  }

  [[nodiscard]] bool is_input() const noexcept { return kind == Kind::PrimaryInput; }
  [[nodiscard]] bool is_constant() const noexcept { return kind == Kind::Constant; }

  friend bool operator==(const LineRole&, const LineRole&) = default;
};

/// How a line leaves the circuit: a named primary output or garbage.
struct OutputLabel {
  bool garbage = true;
  std::string name;
  std::optional<int> weight;

  [[nodiscard]] static OutputLabel make_garbage() { return {}; }
  [[nodiscard]] static OutputLabel primary(std::string name, std::optional<int> weight) {
    return OutputLabel{false, std::move(name), weight};
  }

  friend bool operator==(const OutputLabel&, const OutputLabel&) = default;
};

/// One gate placed on a tuple of lines, in port order.
struct GateApplication {
  GateKind kind = GateKind::Not;
  std::array<LineIndex, kMaxGateArity> lines{};

  [[nodiscard]] std::size_t arity() const noexcept { return gate_arity(kind); }
  [[nodiscard]] std::span<const LineIndex> operands() const noexcept {
    return {lines.data(), arity()};
  }

  friend bool operator==(const GateApplication& a, const GateApplication& b) {
    return a.kind == b.kind && std::ranges::equal(a.operands(), b.operands());
  }
};

/// Named bit values for the primary inputs.
using InputValues = std::map<std::string, Bit>;

/// Final value of every line after simulation.
struct Assignment {
  std::vector<Bit> bits;

  [[nodiscard]] std::size_t size() const noexcept { return bits.size(); }
  [[nodiscard]] Bit operator[](std::size_t line) const { return bits.at(line); }
};

class Circuit {
 public:
  explicit Circuit(std::vector<LineRole> roles) : roles_(std::move(roles)) {
    if (roles_.empty()) throw usage_error("a circuit needs at least one line");
    for (std::size_t i = 0; i < roles_.size(); ++i) check_role(roles_[i], i);
    labels_.assign(roles_.size(), OutputLabel::make_garbage());
  }

  Circuit(std::initializer_list<LineRole> roles) : Circuit(std::vector<LineRole>(roles)) {}

  [[nodiscard]] std::size_t line_count() const noexcept { return roles_.size(); }
  [[nodiscard]] std::size_t gate_count() const noexcept { return gates_.size(); }
  [[nodiscard]] const std::vector<LineRole>& input_roles() const noexcept { return roles_; }
  [[nodiscard]] const std::vector<GateApplication>& gates() const noexcept { return gates_; }
  [[nodiscard]] const std::vector<OutputLabel>& output_labels() const noexcept { return labels_; }
  [[nodiscard]] const LineRole& role(std::size_t line) const { return roles_.at(line); }
  [[nodiscard]] const OutputLabel& label(std::size_t line) const { return labels_.at(line); }

  /// Adds a line at the end; its output label defaults to garbage.
  LineIndex add_line(LineRole role) {
    check_role(role, roles_.size());
    roles_.push_back(std::move(role));
    labels_.push_back(OutputLabel::make_garbage());
    return static_cast<LineIndex>(roles_.size() - 1);
  }

  Circuit& append_gate(GateKind kind, std::span<const LineIndex> lines) {
    const std::size_t k = gate_arity(kind);
    if (lines.size() != k) {
      throw validation_error(validation_error::Kind::ArityMismatch,
                             std::string(gate_name(kind)) + " takes " + std::to_string(k) +
                                 " lines, got " + std::to_string(lines.size()));
    }
    GateApplication app{kind, {}};
    for (std::size_t p = 0; p < k; ++p) {
      if (lines[p] >= roles_.size()) {
        throw validation_error(validation_error::Kind::OutOfRange,
                               "line " + std::to_string(lines[p]) + " out of range for a " +
                                   std::to_string(roles_.size()) + "-line circuit");
      }
      for (std::size_t q = 0; q < p; ++q) {
        if (lines[q] == lines[p]) {
          throw validation_error(validation_error::Kind::DuplicateIndex,
                                 "line " + std::to_string(lines[p]) + " used twice by one " +
                                     std::string(gate_name(kind)) + " gate");
        }
      }
      app.lines[p] = lines[p];
    }
    gates_.push_back(app);
    return *this;
  }

  Circuit& append_gate(GateKind kind, std::initializer_list<LineIndex> lines) {
    return append_gate(kind, std::span<const LineIndex>(lines.begin(), lines.size()));
  }

  void set_output(LineIndex line, std::string name, std::optional<int> weight = std::nullopt) {
    check_line(line);
    if (name.empty()) throw usage_error("output name must not be empty");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (i != line && !labels_[i].garbage && labels_[i].name == name) {
        throw validation_error(validation_error::Kind::DuplicateName,
                               "duplicate output name '" + name + "'");
      }
    }
    labels_[line] = OutputLabel::primary(std::move(name), weight);
  }

  void set_garbage(LineIndex line) {
    check_line(line);
    labels_[line] = OutputLabel::make_garbage();
  }

  /// Primary input names in line order.
  [[nodiscard]] std::vector<std::string> input_names() const {
    std::vector<std::string> names;
    for (const auto& r : roles_) {
      if (r.is_input()) names.push_back(r.name);
    }
    return names;
  }

  [[nodiscard]] std::vector<LineIndex> input_lines() const {
    std::vector<LineIndex> out;
    for (std::size_t i = 0; i < roles_.size(); ++i) {
      if (roles_[i].is_input()) out.push_back(static_cast<LineIndex>(i));
    }
    return out;
  }

  /// Lines carrying a named primary output, in line order.
  [[nodiscard]] std::vector<LineIndex> output_lines() const {
    std::vector<LineIndex> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!labels_[i].garbage) out.push_back(static_cast<LineIndex>(i));
    }
    return out;
  }

  [[nodiscard]] std::vector<LineIndex> garbage_lines() const {
    std::vector<LineIndex> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].garbage) out.push_back(static_cast<LineIndex>(i));
    }
    return out;
  }

  [[nodiscard]] std::optional<LineIndex> find_input(std::string_view name) const {
    for (std::size_t i = 0; i < roles_.size(); ++i) {
      if (roles_[i].is_input() && roles_[i].name == name) return static_cast<LineIndex>(i);
    }
    return std::nullopt;
  }

  [[nodiscard]] std::optional<LineIndex> find_output(std::string_view name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!labels_[i].garbage && labels_[i].name == name) return static_cast<LineIndex>(i);
    }
    return std::nullopt;
  }

  /// Input state with constants injected and primary inputs at 0.
  [[nodiscard]] std::vector<Bit> constant_state() const {
    std::vector<Bit> state(roles_.size(), 0);
    for (std::size_t i = 0; i < roles_.size(); ++i) {
      if (roles_[i].is_constant()) state[i] = roles_[i].value;
    }
    return state;
  }

  /// Applies the cascade in place to a full L-bit state.
  void run(std::span<Bit> state) const { run(state, gates_.size()); }

  /// Applies only the first `gate_limit` gates.
  void run(std::span<Bit> state, std::size_t gate_limit) const {
    if (state.size() != roles_.size()) throw usage_error("state length does not match line count");
    const std::size_t end = std::min(gate_limit, gates_.size());
    for (std::size_t i = 0; i < end; ++i) apply(standard_gate(gates_[i].kind), gates_[i], state);
  }

  /// Applies the inverse cascade (reversed order, inverted gates) in place.
  void run_inverse(std::span<Bit> state) const {
    if (state.size() != roles_.size()) throw usage_error("state length does not match line count");
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
      apply(standard_inverse_gate(it->kind), *it, state);
    }
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  static void apply(const Gate& gate, const GateApplication& g, std::span<Bit> state) {
    const std::size_t k = g.arity();
    std::uint32_t code = 0;
    for (std::size_t p = 0; p < k; ++p) code = (code << 1) | state[g.lines[p]];
    const std::uint32_t out = gate.table()[code];
    for (std::size_t p = 0; p < k; ++p) {
      state[g.lines[p]] = static_cast<Bit>((out >> (k - 1 - p)) & 1U);
    }
  }

  void check_role(const LineRole& r, std::size_t index) const {
    if (r.is_constant() && r.value > 1) throw usage_error("constant value must be 0 or 1");
    if (r.is_input()) {
      if (r.name.empty()) throw usage_error("primary input name must not be empty");
      for (std::size_t i = 0; i < std::min(index, roles_.size()); ++i) {
        if (roles_[i].is_input() && roles_[i].name == r.name) {
          throw validation_error(validation_error::Kind::DuplicateName,
                                 "duplicate input name '" + r.name + "'");
        }
      }
    }
  }

  void check_line(LineIndex line) const {
    if (line >= roles_.size()) {
      throw validation_error(validation_error::Kind::OutOfRange,
                             "line " + std::to_string(line) + " out of range");
    }
  }

  std::vector<LineRole> roles_;
  std::vector<GateApplication> gates_;
  std::vector<OutputLabel> labels_;
};

[[nodiscard]] inline Circuit new_circuit(std::vector<LineRole> roles) {
  return Circuit(std::move(roles));
}

/// Returns `c` extended by one gate application.
[[nodiscard]] inline Circuit append_gate(Circuit c, GateKind kind, std::span<const LineIndex> lines) {
  c.append_gate(kind, lines);
  return c;
}

/// Runs the circuit on named primary inputs. Constants come from the roles.
/// A `gate_limit` stops the cascade after that many gates.
[[nodiscard]] inline Assignment simulate(const Circuit& c, const InputValues& inputs,
                                         std::size_t gate_limit = SIZE_MAX) {
  std::vector<Bit> state = c.constant_state();
  std::size_t matched = 0;
  for (std::size_t i = 0; i < c.line_count(); ++i) {
    const auto& r = c.role(i);
    if (!r.is_input()) continue;
    auto it = inputs.find(r.name);
    if (it == inputs.end()) throw usage_error("missing value for input '" + r.name + "'");
    if (it->second > 1) throw usage_error("input '" + r.name + "' must be 0 or 1");
    state[i] = it->second;
    ++matched;
  }
  if (matched != inputs.size()) {
    for (const auto& [name, value] : inputs) {
      if (!c.find_input(name)) throw usage_error("unknown input '" + name + "'");
    }
  }
  c.run(state, gate_limit);
  return Assignment{std::move(state)};
}

/// One row of an exhaustive truth table.
struct TruthRow {
  std::uint64_t input_code = 0;  // first primary input is the most significant bit
  std::vector<Bit> inputs;
  std::vector<Bit> outputs;  // per Circuit::output_lines()
  std::vector<Bit> garbage;  // per Circuit::garbage_lines()
};

struct TruthTable {
  std::vector<std::string> input_names;
  std::vector<std::string> output_names;
  std::vector<LineIndex> garbage_lines;
  std::vector<TruthRow> rows;
};

[[nodiscard]] inline TruthTable truth_table(const Circuit& c,
                                            std::size_t cap = kDefaultEnumerationCap) {
  const auto in_lines = c.input_lines();
  const auto out_lines = c.output_lines();
  const auto garbage = c.garbage_lines();
  if (in_lines.size() > cap) throw enumeration_cap_error(in_lines.size(), cap);

  TruthTable tt;
  tt.input_names = c.input_names();
  for (LineIndex l : out_lines) tt.output_names.push_back(c.label(l).name);
  tt.garbage_lines = garbage;

  const std::size_t n = in_lines.size();
  const std::uint64_t rows = std::uint64_t{1} << n;
  tt.rows.reserve(rows);
  const std::vector<Bit> base = c.constant_state();
  std::vector<Bit> state;
  for (std::uint64_t code = 0; code < rows; ++code) {
    state = base;
    TruthRow row;
    row.input_code = code;
    row.inputs.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const Bit b = static_cast<Bit>((code >> (n - 1 - k)) & 1U);
      row.inputs[k] = b;
      state[in_lines[k]] = b;
    }
    c.run(state);
    for (LineIndex l : out_lines) row.outputs.push_back(state[l]);
    for (LineIndex l : garbage) row.garbage.push_back(state[l]);
    tt.rows.push_back(std::move(row));
  }
  return tt;
}

/// Exhaustively checks that the full L-bit transfer function, with constant
/// lines treated as free, is a permutation.
[[nodiscard]] inline bool check_circuit_reversibility(const Circuit& c,
                                                      std::size_t cap = kDefaultEnumerationCap) {
  const std::size_t L = c.line_count();
  if (L > cap) throw enumeration_cap_error(L, cap);
  const std::uint64_t states = std::uint64_t{1} << L;
  std::vector<bool> seen(states, false);
  std::vector<Bit> state(L);
  for (std::uint64_t x = 0; x < states; ++x) {
    for (std::size_t i = 0; i < L; ++i) state[i] = static_cast<Bit>((x >> (L - 1 - i)) & 1U);
    c.run(state);
    std::uint64_t y = 0;
    for (Bit b : state) y = (y << 1) | b;
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

namespace detail {

inline std::string pack_bits(std::span<const Bit> bits) {
  std::string out((bits.size() + 7) / 8, '\0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i / 8] = static_cast<char>(out[i / 8] | (1 << (i % 8)));
  }
  return out;
}

}  // namespace detail

/// Sampled injectivity probe for circuits too wide for the exhaustive check:
/// runs `samples` distinct random L-bit states and reports whether any two
/// produced the same output state.
[[nodiscard]] inline bool probe_injectivity(const Circuit& c, std::size_t samples,
                                            std::uint64_t seed) {
  const std::size_t L = c.line_count();
  if (L < 64) samples = std::min<std::uint64_t>(samples, std::uint64_t{1} << L);
  std::mt19937_64 rng(seed);
  std::unordered_set<std::string> inputs_seen;
  std::unordered_set<std::string> outputs_seen;
  inputs_seen.reserve(samples);
  outputs_seen.reserve(samples);
  std::vector<Bit> state(L);
  while (inputs_seen.size() < samples) {
    for (auto& b : state) b = static_cast<Bit>(rng() & 1U);
    if (!inputs_seen.insert(detail::pack_bits(state)).second) continue;
    c.run(state);
    if (!outputs_seen.insert(detail::pack_bits(state)).second) return false;
  }
  return true;
}

/// Lines at which a gate kind may legitimately consume a constant ancilla.
[[nodiscard]] constexpr bool is_ancilla_port(GateKind kind, std::size_t port) {
  switch (kind) {
    case GateKind::Tsg:
      return port == 2 || port == 3;
    case GateKind::Fredkin:
    case GateKind::Toffoli:
      return port == 2;
    case GateKind::Feynman:
      return port == 1;
    case GateKind::Not:
      return port == 0;
  }
  return false;
}

/// Structural lint for generated circuits: every constant line is first read
/// at an ancilla port, so no gate consumes a constant where it expects data.
/// Returns one message per offending line.
[[nodiscard]] inline std::vector<std::string> lint_constant_lines(const Circuit& c) {
  std::vector<std::string> problems;
  std::vector<bool> touched(c.line_count(), false);
  for (std::size_t gi = 0; gi < c.gate_count(); ++gi) {
    const auto& g = c.gates()[gi];
    for (std::size_t p = 0; p < g.arity(); ++p) {
      const LineIndex l = g.lines[p];
      if (touched[l]) continue;
      touched[l] = true;
      if (c.role(l).is_constant() && !is_ancilla_port(g.kind, p)) {
        problems.push_back("constant line " + std::to_string(l) + " first read by gate " +
                           std::to_string(gi) + " (" + std::string(gate_name(g.kind)) +
                           ") at data port " + std::to_string(p));
      }
    }
  }
  return problems;
}

}  // namespace revlogic
