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

/// @file cli.hpp
/// @brief The `revlogic` command line: gen, sim, verify, metrics, truth.
///
/// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "revlogic/analysis.hpp"
#include "revlogic/arith.hpp"
#include "revlogic/circuit.hpp"
#include "revlogic/rnl.hpp"

namespace revlogic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses fa | ha | c42 | add:N | mul:N.
[[nodiscard]] inline FunctionSpec parse_spec_name(std::string_view name) {
  if (name == "fa") return FunctionSpec::full_adder();
  if (name == "ha") return FunctionSpec::half_adder();
  if (name == "c42") return FunctionSpec::compressor_4_2();
  auto width = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (!name.starts_with(prefix)) return std::nullopt;
    auto n = detail::to_int<std::size_t>(name.substr(prefix.size()));
    if (!n) throw usage_error("bad width in spec '" + std::string(name) + "'");
    return n;
  };
  if (auto n = width("add:")) return FunctionSpec::ripple_adder(*n);
  if (auto n = width("mul:")) return FunctionSpec::multiplier(*n);
  throw usage_error("unknown spec '" + std::string(name) + "' (expected fa, ha, c42, add:N, mul:N)");
}

[[nodiscard]] inline Circuit generate(std::string_view what, std::size_t bits) {
  if (what == "full-adder") return gen_full_adder();
  if (what == "half-adder") return gen_half_adder();
  if (what == "compressor42") return gen_compressor_4_2();
  if (what == "ripple") return gen_ripple_adder(bits);
  if (what == "wallace") return gen_wallace_multiplier(bits);
  throw usage_error("unknown circuit '" + std::string(what) + "'");
}

[[nodiscard]] inline Circuit load_netlist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_netlist(buf.str());
  } catch (const parse_error& e) {
    throw parse_error(e.line(), e.column(), path + ": " + e.what());
  }
}

[[nodiscard]] inline std::string format_truth_csv(const TruthTable& tt, bool with_garbage) {
  std::ostringstream os;
  bool first = true;
  auto cell = [&](const std::string& s) {
    if (!first) os << ',';
    os << s;
    first = false;
  };
  for (const auto& n : tt.input_names) cell(n);
  for (const auto& n : tt.output_names) cell(n);
  if (with_garbage) {
    for (LineIndex l : tt.garbage_lines) cell("garbage" + std::to_string(l));
  }
  os << '\n';
  for (const auto& row : tt.rows) {
    first = true;
    for (Bit b : row.inputs) cell(std::to_string(b));
    for (Bit b : row.outputs) cell(std::to_string(b));
    if (with_garbage) {
      for (Bit b : row.garbage) cell(std::to_string(b));
    }
    os << '\n';
  }
  return os.str();
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible logic toolkit: generate, simulate, verify and measure TSG circuits",
               "revlogic"};
  app.require_subcommand(1);

  std::string gen_what;
  std::size_t gen_bits = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a circuit as an RNL netlist");
  gen->add_option("circuit", gen_what, "full-adder | half-adder | compressor42 | ripple | wallace")
      ->required()
      ->check(CLI::IsMember({"full-adder", "half-adder", "compressor42", "ripple", "wallace"}));
  gen->add_option("--bits", gen_bits, "Operand width for ripple and wallace");
  gen->add_option("-o,--output", gen_out, "Write to FILE instead of stdout");

  std::string sim_file;
  std::vector<std::string> sim_sets;
  auto* sim = app.add_subcommand("sim", "Simulate a netlist on one input vector");
  sim->add_option("file", sim_file)->required();
  sim->add_option("--set", sim_sets, "NAME=BIT, repeatable")->take_all();

  std::string verify_file;
  std::string verify_spec;
  bool verify_exhaustive = false;
  std::optional<std::uint64_t> verify_random;
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "Check a netlist against an arithmetic spec");
  verify->add_option("file", verify_file)->required();
  verify->add_option("--spec", verify_spec, "fa | ha | c42 | add:N | mul:N")->required();
  auto* ex_flag = verify->add_flag("--exhaustive", verify_exhaustive, "Enumerate every input");
  auto* rnd_opt = verify->add_option("--random", verify_random, "Check K random inputs");
  verify->add_option("--seed", verify_seed, "Seed for --random")->needs(rnd_opt);
  ex_flag->excludes(rnd_opt);

  std::string metrics_file;
  bool metrics_kv = false;
  auto* met = app.add_subcommand("metrics", "Report gate, garbage, constant and delay counts");
  met->add_option("file", metrics_file)->required();
  met->add_flag("--kv", metrics_kv, "key=value output");

  std::string truth_file;
  bool truth_garbage = false;
  auto* truth = app.add_subcommand("truth", "Print the exhaustive truth table as CSV");
  truth->add_option("file", truth_file)->required();
  truth->add_flag("--garbage", truth_garbage, "Include garbage columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if ((gen_what == "ripple" || gen_what == "wallace") && gen_bits == 0) {
        throw usage_error("'" + gen_what + "' needs --bits N");
      }
      const std::string text = write_netlist(generate(gen_what, gen_bits));
      if (gen_out.empty()) {
        out << text;
      } else {
        std::ofstream f(gen_out);
        if (!f) throw usage_error("cannot write '" + gen_out + "'");
        f << text;
      }
      return kExitOk;
    }

    if (sim->parsed()) {
      const Circuit c = load_netlist(sim_file);
      InputValues inputs;
      for (const auto& s : sim_sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 2 != s.size() ||
            (s[eq + 1] != '0' && s[eq + 1] != '1')) {
          throw usage_error("--set expects NAME=0 or NAME=1, got '" + s + "'");
        }
        inputs[s.substr(0, eq)] = static_cast<Bit>(s[eq + 1] - '0');
      }
      const Assignment result = simulate(c, inputs);
      bool first = true;
      for (LineIndex l : c.output_lines()) {
        out << (first ? "" : " ") << c.label(l).name << '=' << int{result[l]};
        first = false;
      }
      out << '\n';
      return kExitOk;
    }

    if (verify->parsed()) {
      const Circuit c = load_netlist(verify_file);
      const FunctionSpec spec = parse_spec_name(verify_spec);
      const VerifyMode mode =
          verify_random ? VerifyMode::random(*verify_random, verify_seed) : VerifyMode::make_exhaustive();
      const Verdict v = verify_function(c, spec, mode);
      if (v.pass) {
        out << "PASS " << v.cases_checked << " cases\n";
        return kExitOk;
      }
      const auto& cx = *v.counterexample;
      out << "FAIL after " << v.cases_checked << " cases\ncounterexample:";
      for (const auto& name : spec.input_names) out << ' ' << name << '=' << int{cx.inputs.at(name)};
      out << "\nexpected " << cx.expected << ", got " << cx.actual;
      if (!cx.mismatched_output.empty()) out << " (output " << cx.mismatched_output << ")";
      out << '\n';
      return kExitVerifyFailed;
    }

    if (met->parsed()) {
      const MetricsReport r = metrics(load_netlist(metrics_file));
      out << (metrics_kv ? format_metrics_kv(r) : format_metrics_table(r));
      return kExitOk;
    }

    if (truth->parsed()) {
      const Circuit c = load_netlist(truth_file);
      out << format_truth_csv(truth_table(c), truth_garbage);
      return kExitOk;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const enumeration_cap_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace revlogic::cli
