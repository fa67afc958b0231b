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

/// @file rnl.hpp
/// @brief RNL v1, a line-oriented text format for cascade netlists.
///
///     lines L
///     input IDX NAME
///     const IDX VALUE
///     gate KIND IDX...
///     output IDX NAME [WEIGHT]
///     garbage IDX
///
/// `#` starts a comment. Lines without an output directive are garbage.

#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "revlogic/circuit.hpp"
#include "revlogic/errors.hpp"
#include "revlogic/gate.hpp"

namespace revlogic {

/// Malformed netlist text, with a 1-based location.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

template <class Int>
std::optional<Int> to_int(std::string_view s) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

[[nodiscard]] inline Circuit parse_netlist(std::string_view text) {
  std::optional<std::size_t> line_count;
  std::size_t lines_row = 0;
  std::vector<std::optional<LineRole>> roles;
  struct PendingGate {
    GateKind kind;
    std::vector<LineIndex> lines;
    std::size_t row;
    std::size_t column;
  };
  std::vector<PendingGate> gates;
  struct PendingLabel {
    LineIndex line;
    OutputLabel label;
    std::size_t row;
    std::size_t column;
  };
  std::vector<std::optional<PendingLabel>> labels;

  std::size_t row = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++row;
    const auto tok = detail::tokenize(raw);
    if (tok.empty()) continue;

    const std::string_view directive = tok[0].text;
    auto fail = [&](std::size_t column, const std::string& msg) -> parse_error {
      return parse_error(row, column, msg);
    };
    auto expect_count = [&](std::size_t lo, std::size_t hi) {
      if (tok.size() < lo || tok.size() > hi) {
        const std::size_t col = tok.size() > hi ? tok[hi].column : raw.size() + 1;
        throw fail(col, "'" + std::string(directive) + "' takes " +
                            (lo == hi ? std::to_string(lo - 1)
                                      : std::to_string(lo - 1) + " to " + std::to_string(hi - 1)) +
                            " arguments");
      }
    };
    auto index_at = [&](std::size_t t) -> LineIndex {
      auto v = detail::to_int<LineIndex>(tok[t].text);
      if (!v) throw fail(tok[t].column, "expected a line index, got '" + std::string(tok[t].text) + "'");
      if (!line_count) throw fail(tok[t].column, "'lines' must come before other directives");
      if (*v >= *line_count) {
        throw fail(tok[t].column, "line index " + std::to_string(*v) + " out of range (" +
                                      std::to_string(*line_count) + " lines)");
      }
      return *v;
    };

    if (directive == "lines") {
      expect_count(2, 2);
      if (line_count) throw fail(tok[0].column, "duplicate 'lines' directive");
      auto v = detail::to_int<std::size_t>(tok[1].text);
      if (!v) throw fail(tok[1].column, "expected a line count");
      if (*v == 0) throw fail(tok[1].column, "a circuit needs at least one line");
      line_count = *v;
      lines_row = row;
      roles.assign(*v, std::nullopt);
      labels.assign(*v, std::nullopt);
    } else if (directive == "input" || directive == "const") {
      expect_count(3, 3);
      const LineIndex idx = index_at(1);
      if (roles[idx]) throw fail(tok[1].column, "line " + std::to_string(idx) + " already has an input role");
      if (directive == "input") {
        for (const auto& r : roles) {
          if (r && r->is_input() && r->name == tok[2].text) {
            throw fail(tok[2].column, "duplicate input name '" + std::string(tok[2].text) + "'");
          }
        }
        roles[idx] = LineRole::input(std::string(tok[2].text));
      } else {
        if (tok[2].text != "0" && tok[2].text != "1") {
          throw fail(tok[2].column, "constant value must be 0 or 1");
        }
        roles[idx] = LineRole::constant(tok[2].text == "1" ? 1 : 0);
      }
    } else if (directive == "gate") {
      if (tok.size() < 2) throw fail(raw.size() + 1, "'gate' needs a kind");
      auto kind = parse_gate_kind(tok[1].text);
      if (!kind) throw fail(tok[1].column, "unknown gate kind '" + std::string(tok[1].text) + "'");
      const std::size_t k = gate_arity(*kind);
      if (tok.size() - 2 != k) {
        throw fail(tok[1].column, std::string(gate_name(*kind)) + " takes " + std::to_string(k) +
                                      " line indices, got " + std::to_string(tok.size() - 2));
      }
      PendingGate g{*kind, {}, row, tok[0].column};
      for (std::size_t t = 2; t < tok.size(); ++t) {
        const LineIndex idx = index_at(t);
        for (LineIndex prev : g.lines) {
          if (prev == idx) throw fail(tok[t].column, "line " + std::to_string(idx) + " repeated in one gate");
        }
        g.lines.push_back(idx);
      }
      gates.push_back(std::move(g));
    } else if (directive == "output") {
      expect_count(3, 4);
      const LineIndex idx = index_at(1);
      if (labels[idx]) throw fail(tok[1].column, "line " + std::to_string(idx) + " already has an output label");
      for (const auto& l : labels) {
        if (l && !l->label.garbage && l->label.name == tok[2].text) {
          throw fail(tok[2].column, "duplicate output label '" + std::string(tok[2].text) + "'");
        }
      }
      std::optional<int> weight;
      if (tok.size() == 4) {
        weight = detail::to_int<int>(tok[3].text);
        if (!weight || *weight < 0) throw fail(tok[3].column, "weight must be a non-negative integer");
      }
      labels[idx] = PendingLabel{idx, OutputLabel::primary(std::string(tok[2].text), weight), row,
                                 tok[0].column};
    } else if (directive == "garbage") {
      expect_count(2, 2);
      const LineIndex idx = index_at(1);
      if (labels[idx]) throw fail(tok[1].column, "line " + std::to_string(idx) + " already has an output label");
      labels[idx] = PendingLabel{idx, OutputLabel::make_garbage(), row, tok[0].column};
    } else {
      throw fail(tok[0].column, "unknown directive '" + std::string(directive) + "'");
    }
  }

  if (!line_count) throw parse_error(1, 1, "missing 'lines' directive");
  std::vector<LineRole> final_roles;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (!roles[i]) {
      throw parse_error(lines_row, 1, "line " + std::to_string(i) + " has no input or const directive");
    }
    final_roles.push_back(*roles[i]);
  }
  Circuit c(std::move(final_roles));
  for (const auto& g : gates) {
    try {
      c.append_gate(g.kind, std::span<const LineIndex>(g.lines));
    } catch (const validation_error& e) {
      throw parse_error(g.row, g.column, e.what());
    }
  }
  for (const auto& l : labels) {
    if (l && !l->label.garbage) c.set_output(l->line, l->label.name, l->label.weight);
  }
  return c;
}

/// Canonical text: lines, input/const by index, gates in cascade order,
/// output/garbage by index. Single spaces, newline-terminated.
[[nodiscard]] inline std::string write_netlist(const Circuit& c) {
  std::ostringstream os;
  os << "lines " << c.line_count() << '\n';
  for (std::size_t i = 0; i < c.line_count(); ++i) {
    const auto& r = c.role(i);
    if (r.is_input()) {
      os << "input " << i << ' ' << r.name << '\n';
    } else {
      os << "const " << i << ' ' << int{r.value} << '\n';
    }
  }
  for (const auto& g : c.gates()) {
    os << "gate " << gate_name(g.kind);
    for (LineIndex l : g.operands()) os << ' ' << l;
    os << '\n';
  }
  for (std::size_t i = 0; i < c.line_count(); ++i) {
    const auto& l = c.label(i);
    if (l.garbage) {
      os << "garbage " << i << '\n';
    } else {
      os << "output " << i << ' ' << l.name;
      if (l.weight) os << ' ' << *l.weight;
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace revlogic
