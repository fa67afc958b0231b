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

/// @file analysis.hpp
/// @brief Cost metrics for cascades and functional verification against
/// arithmetic specifications.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "revlogic/circuit.hpp"
#include "revlogic/errors.hpp"
#include "revlogic/gate.hpp"

namespace revlogic {

struct MetricsReport {
  std::size_t total_gates = 0;
  std::map<GateKind, std::size_t> gates_by_kind;
  std::size_t garbage_outputs = 0;
  std::size_t constant_inputs = 0;
  std::size_t unit_delay = 0;
  std::size_t lines = 0;

  [[nodiscard]] std::size_t count(GateKind kind) const {
    auto it = gates_by_kind.find(kind);
    return it == gates_by_kind.end() ? 0 : it->second;
  }

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Gate levels per line: a gate sits one level above the deepest gate that
/// previously touched any of its lines. Every gate costs one unit.
[[nodiscard]] inline MetricsReport metrics(const Circuit& c) {
  MetricsReport r;
  r.lines = c.line_count();
  r.total_gates = c.gate_count();
  for (GateKind k : kAllGateKinds) r.gates_by_kind[k] = 0;

  std::vector<std::size_t> level(c.line_count(), 0);
  for (const auto& g : c.gates()) {
    ++r.gates_by_kind[g.kind];
    std::size_t deepest = 0;
    for (LineIndex l : g.operands()) deepest = std::max(deepest, level[l]);
    for (LineIndex l : g.operands()) level[l] = deepest + 1;
    r.unit_delay = std::max(r.unit_delay, deepest + 1);
  }
  for (std::size_t i = 0; i < c.line_count(); ++i) {
    if (c.label(i).garbage) ++r.garbage_outputs;
    if (c.role(i).is_constant()) ++r.constant_inputs;
  }
  return r;
}

/// Key/value rendering with stable key names, one per line.
[[nodiscard]] inline std::string format_metrics_kv(const MetricsReport& r) {
  std::ostringstream os;
  os << "total_gates=" << r.total_gates << '\n';
  for (GateKind k : kAllGateKinds) {
    os << "gates_by_kind." << gate_label(k) << '=' << r.count(k) << '\n';
  }
  os << "garbage_outputs=" << r.garbage_outputs << '\n';
  os << "constant_inputs=" << r.constant_inputs << '\n';
  os << "unit_delay=" << r.unit_delay << '\n';
  os << "lines=" << r.lines << '\n';
  return os.str();
}

[[nodiscard]] inline std::string format_metrics_table(const MetricsReport& r) {
  std::vector<std::pair<std::string, std::size_t>> rows;
  rows.emplace_back("total_gates", r.total_gates);
  for (GateKind k : kAllGateKinds) {
    rows.emplace_back("gates_by_kind." + std::string(gate_label(k)), r.count(k));
  }
  rows.emplace_back("garbage_outputs", r.garbage_outputs);
  rows.emplace_back("constant_inputs", r.constant_inputs);
  rows.emplace_back("unit_delay", r.unit_delay);
  rows.emplace_back("lines", r.lines);

  std::size_t width = std::string_view("metric").size();
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "metric" << "  value\n";
  os << std::string(width, '-') << "  -----\n";
  for (const auto& [k, v] : rows) {
    os << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Function specifications

enum class FunctionKind { FullAdder, HalfAdder, Compressor42, RippleAdder, AndArray, Multiplier };

/// Arithmetic oracle a circuit is checked against.
///
/// Inputs are bits in `input_names` order. By default the circuit's outputs
/// are read as a weighted sum (bit * 2^weight, weights from `output_weights`)
/// and compared with `expected_value`. When `expected_bits` is set, each
/// output is instead compared bit by bit.
struct FunctionSpec {
  FunctionKind kind = FunctionKind::FullAdder;
  std::size_t width = 1;
  std::vector<std::string> input_names;
  std::vector<std::string> output_names;
  std::vector<int> output_weights;
  std::function<std::uint64_t(const std::vector<Bit>&)> expected_value;
  std::function<std::vector<Bit>(const std::vector<Bit>&)> expected_bits;

  [[nodiscard]] static FunctionSpec full_adder() {
    FunctionSpec s;
    s.kind = FunctionKind::FullAdder;
    s.input_names = {"A", "B", "Cin"};
    s.output_names = {"Sum", "Cout"};
    s.output_weights = {0, 1};
    s.expected_value = [](const std::vector<Bit>& x) -> std::uint64_t {
      return std::uint64_t{x[0]} + x[1] + x[2];
    };
    return s;
  }

  [[nodiscard]] static FunctionSpec half_adder() {
    FunctionSpec s;
    s.kind = FunctionKind::HalfAdder;
    s.input_names = {"A", "B"};
    s.output_names = {"Sum", "Carry"};
    s.output_weights = {0, 1};
    s.expected_value = [](const std::vector<Bit>& x) -> std::uint64_t {
      return std::uint64_t{x[0]} + x[1];
    };
    return s;
  }

  /// x1 + x2 + x3 + x4 + cin = Sum + 2 * (Carry + Cout)
  [[nodiscard]] static FunctionSpec compressor_4_2() {
    FunctionSpec s;
    s.kind = FunctionKind::Compressor42;
    s.input_names = {"x1", "x2", "x3", "x4", "cin"};
    s.output_names = {"Sum", "Carry", "Cout"};
    s.output_weights = {0, 1, 1};
    s.expected_value = [](const std::vector<Bit>& x) -> std::uint64_t {
      return std::uint64_t{x[0]} + x[1] + x[2] + x[3] + x[4];
    };
    return s;
  }

  /// Inputs a0..a(n-1), b0..b(n-1), cin; outputs s0..s(n-1), cout.
  [[nodiscard]] static FunctionSpec ripple_adder(std::size_t n) {
    if (n == 0 || n > 31) throw usage_error("ripple adder width must be in [1, 31]");
    FunctionSpec s;
    s.kind = FunctionKind::RippleAdder;
    s.width = n;
    for (std::size_t i = 0; i < n; ++i) s.input_names.push_back("a" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) s.input_names.push_back("b" + std::to_string(i));
    s.input_names.push_back("cin");
    for (std::size_t i = 0; i < n; ++i) {
      s.output_names.push_back("s" + std::to_string(i));
      s.output_weights.push_back(static_cast<int>(i));
    }
    s.output_names.push_back("cout");
    s.output_weights.push_back(static_cast<int>(n));
    s.expected_value = [n](const std::vector<Bit>& x) -> std::uint64_t {
      std::uint64_t a = 0;
      std::uint64_t b = 0;
      for (std::size_t i = 0; i < n; ++i) {
        a |= std::uint64_t{x[i]} << i;
        b |= std::uint64_t{x[n + i]} << i;
      }
      return a + b + x[2 * n];
    };
    return s;
  }

  /// Inputs a0.., b0..; outputs pp<i>_<j> = a_i AND b_j, checked bitwise.
  [[nodiscard]] static FunctionSpec and_array(std::size_t n) {
    if (n == 0 || n > 32) throw usage_error("AND array width must be in [1, 32]");
    FunctionSpec s;
    s.kind = FunctionKind::AndArray;
    s.width = n;
    for (std::size_t i = 0; i < n; ++i) s.input_names.push_back("a" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) s.input_names.push_back("b" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        s.output_names.push_back("pp" + std::to_string(i) + "_" + std::to_string(j));
        s.output_weights.push_back(static_cast<int>(i + j));
      }
    }
    s.expected_bits = [n](const std::vector<Bit>& x) {
      std::vector<Bit> out;
      out.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out.push_back(static_cast<Bit>(x[i] & x[n + j]));
      }
      return out;
    };
    return s;
  }

  /// Inputs a0.., b0..; outputs P0..P(2n-1) with sum Pi * 2^i = a * b.
  [[nodiscard]] static FunctionSpec multiplier(std::size_t n) {
    if (n == 0 || n > 32) throw usage_error("multiplier width must be in [1, 32]");
    FunctionSpec s;
    s.kind = FunctionKind::Multiplier;
    s.width = n;
    for (std::size_t i = 0; i < n; ++i) s.input_names.push_back("a" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) s.input_names.push_back("b" + std::to_string(i));
    for (std::size_t i = 0; i < 2 * n; ++i) {
      s.output_names.push_back("P" + std::to_string(i));
      s.output_weights.push_back(static_cast<int>(i));
    }
    s.expected_value = [n](const std::vector<Bit>& x) -> std::uint64_t {
      std::uint64_t a = 0;
      std::uint64_t b = 0;
      for (std::size_t i = 0; i < n; ++i) {
        a |= std::uint64_t{x[i]} << i;
        b |= std::uint64_t{x[n + i]} << i;
      }
      return a * b;
    };
    return s;
  }
};

struct VerifyMode {
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  [[nodiscard]] static VerifyMode make_exhaustive() { return {}; }
  [[nodiscard]] static VerifyMode random(std::uint64_t samples, std::uint64_t seed) {
    return VerifyMode{false, samples, seed};
  }
};

struct Counterexample {
  InputValues inputs;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
  std::string mismatched_output;  // bitwise specs only
};

struct Verdict {
  bool pass = true;
  std::uint64_t cases_checked = 0;
  std::optional<Counterexample> counterexample;
};

namespace detail {

inline std::string describe_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace detail

/// Checks `c` against `spec`. Exhaustive mode walks input codes in ascending
/// order (first input name most significant), so the reported counterexample
/// is the first failing input in that order. Random mode draws `samples`
/// uniformly distributed codes from a seeded generator.
[[nodiscard]] inline Verdict verify_function(const Circuit& c, const FunctionSpec& spec,
                                             VerifyMode mode,
                                             std::size_t cap = kDefaultEnumerationCap) {
  {
    auto want = std::set<std::string>(spec.input_names.begin(), spec.input_names.end());
    auto have_v = c.input_names();
    auto have = std::set<std::string>(have_v.begin(), have_v.end());
    if (want != have) {
      throw usage_error("input names do not match: spec has {" +
                        detail::describe_names(spec.input_names) + "}, circuit has {" +
                        detail::describe_names(have_v) + "}");
    }
  }
  std::vector<LineIndex> in_lines;
  for (const auto& name : spec.input_names) in_lines.push_back(*c.find_input(name));
  std::vector<LineIndex> out_lines;
  for (const auto& name : spec.output_names) {
    auto l = c.find_output(name);
    if (!l) throw usage_error("circuit has no output named '" + name + "'");
    out_lines.push_back(*l);
  }

  const std::size_t n = in_lines.size();
  if (n > 64) throw usage_error("more than 64 primary inputs are not supported");
  if (mode.exhaustive && n > cap) throw enumeration_cap_error(n, cap);

  const std::vector<Bit> base = c.constant_state();
  std::vector<Bit> state;
  std::vector<Bit> x(n);

  auto check = [&](std::uint64_t code) -> std::optional<Counterexample> {
    state = base;
    for (std::size_t k = 0; k < n; ++k) {
      x[k] = static_cast<Bit>((code >> (n - 1 - k)) & 1U);
      state[in_lines[k]] = x[k];
    }
    c.run(state);

    auto weighted = [&](auto bit_at) {
      std::uint64_t v = 0;
      for (std::size_t o = 0; o < out_lines.size(); ++o) {
        v += std::uint64_t{bit_at(o)} << spec.output_weights[o];
      }
      return v;
    };
    const std::uint64_t actual = weighted([&](std::size_t o) { return state[out_lines[o]]; });

    Counterexample cx;
    if (spec.expected_bits) {
      const std::vector<Bit> want = spec.expected_bits(x);
      for (std::size_t o = 0; o < out_lines.size(); ++o) {
        if (state[out_lines[o]] != want[o]) {
          cx.mismatched_output = spec.output_names[o];
          cx.expected = weighted([&](std::size_t i) { return want[i]; });
          break;
        }
      }
      if (cx.mismatched_output.empty()) return std::nullopt;
    } else {
      cx.expected = spec.expected_value(x);
      if (cx.expected == actual) return std::nullopt;
    }
    cx.actual = actual;
    for (std::size_t k = 0; k < n; ++k) cx.inputs[spec.input_names[k]] = x[k];
    return cx;
  };

  Verdict v;
  if (mode.exhaustive) {
    const std::uint64_t rows = std::uint64_t{1} << n;
    for (std::uint64_t code = 0; code < rows; ++code) {
      ++v.cases_checked;
      if (auto cx = check(code)) {
        v.pass = false;
        v.counterexample = std::move(cx);
        return v;
      }
    }
  } else {
    std::mt19937_64 rng(mode.seed);
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 0; s < mode.samples; ++s) {
      ++v.cases_checked;
      if (auto cx = check(rng() & mask)) {
        v.pass = false;
        v.counterexample = std::move(cx);
        return v;
      }
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Published comparison rows

struct ReferenceRow {
  std::string_view design;
  std::size_t gates;
  std::size_t garbage;
  std::size_t delay;
};

/// Reversible full adders: gates, garbage outputs, unit delay.
inline constexpr ReferenceRow kProposedFullAdder{"TSG full adder", 1, 2, 1};
inline constexpr std::array<ReferenceRow, 3> kFullAdderReferences = {{
    {"Existing Circuit [6]", 3, 3, 3},
    {"Existing Circuit [7,8]", 3, 2, 3},
    {"Existing Circuit [9]", 5, 5, 5},
}};

/// 4:2 compressors built from two full adders: gates, garbage, unit clock cycles.
inline constexpr ReferenceRow kProposedCompressor{"4:2 compressor using TSG", 2, 4, 2};
inline constexpr std::array<ReferenceRow, 3> kCompressorReferences = {{
    {"Existing Circuit [6]", 6, 6, 6},
    {"Existing Circuit [7,8]", 6, 4, 4},
    {"Existing Circuit [9]", 10, 10, 10},
}};

enum class Relation { Fewer, Equal, More };

[[nodiscard]] constexpr std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::Fewer:
      return "fewer";
    case Relation::Equal:
      return "equal";
    case Relation::More:
      return "more";
  }
  return "?";
}

struct FieldComparison {
  Relation gates;
  Relation garbage;
  Relation delay;

  /// Fewer-or-equal on every field.
  [[nodiscard]] bool matches_or_dominates() const {
    return gates != Relation::More && garbage != Relation::More && delay != Relation::More;
  }
  /// Strictly fewer on every field.
  [[nodiscard]] bool dominates_all() const {
    return gates == Relation::Fewer && garbage == Relation::Fewer && delay == Relation::Fewer;
  }
};

[[nodiscard]] constexpr Relation relate(std::size_t ours, std::size_t theirs) {
  if (ours < theirs) return Relation::Fewer;
  if (ours == theirs) return Relation::Equal;
  return Relation::More;
}

[[nodiscard]] inline FieldComparison compare_against_reference(const MetricsReport& report,
                                                               const ReferenceRow& row) {
  return {relate(report.total_gates, row.gates), relate(report.garbage_outputs, row.garbage),
          relate(report.unit_delay, row.delay)};
}

}  // namespace revlogic
