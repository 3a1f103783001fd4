// Copyright 2026 The simon-arch Authors.
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

#include "simon/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>

#include "simon/arch/machine.hpp"
#include "simon/arch/verify.hpp"
#include "simon/core.hpp"
#include "simon/perf_model.hpp"
#include "simon/text_io.hpp"

namespace simon::cli {
namespace {

// Raised by subcommand handlers for bad arguments or unreadable input.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> key;
  std::vector<std::string> block;
  std::string arch = "all";
  std::string mode = "encrypt";
  std::string blocks_file;
  std::vector<std::string> trace;
  std::string trace_out;
  long long n = 1000;
  std::uint64_t seed = 0;
  std::string inputs_file;
  std::string format = "text";
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return in;
}

int cmd_cipher(const Options& o, bool decrypt, std::ostream& out) {
  const MasterKey key = io::parse_key(o.key);
  const Block in = io::parse_block(o.block);
  out << io::hex_block(decrypt ? decrypt_block(in, key) : encrypt_block(in, key))
      << '\n';
  return kExitOk;
}

int cmd_expand_key(const Options& o, std::ostream& out) {
  const RoundKeys keys = expand_key(io::parse_key(o.key));
  for (int i = 0; i < kRounds; ++i) {
    out << i << ": " << io::hex_word(keys[i]) << '\n';
  }
  return kExitOk;
}

arch::Mode parse_mode(const std::string& mode) {
  if (mode == "encrypt") return arch::Mode::Encrypt;
  if (mode == "decrypt") return arch::Mode::Decrypt;
  throw UsageError("mode must be encrypt or decrypt, got '" + mode + "'");
}

arch::ArchConfig parse_arch_or_usage(const std::string& name) {
  try {
    return arch::parse_arch(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const auto config = parse_arch_or_usage(o.arch);
  const MasterKey key = io::parse_key(o.key);
  const arch::Mode mode = parse_mode(o.mode);
  auto file = open_input(o.blocks_file);
  const std::vector<Block> blocks = io::read_blocks(file);

  auto machine = arch::build_machine(config, key);
  if (!o.trace.empty()) {
    // Reject unknown names before spending any cycles.
    try {
      (void)machine.trace_signals(o.trace);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const auto result = machine.run_job(mode, blocks);
  for (const Block& b : result.outputs) out << io::hex_block(b) << '\n';
  out << "latency=" << result.report.latency_cycles
      << " ii=" << result.report.initiation_interval
      << " preexp=" << result.report.pre_expansion_cycles << '\n';

  if (!o.trace_out.empty()) {
    std::ofstream trace_file(o.trace_out);
    if (!trace_file) throw UsageError("cannot write '" + o.trace_out + "'");
    const auto trace = o.trace.empty() ? machine.trace()
                                       : machine.trace_signals(o.trace);
    trace.write(trace_file);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  std::vector<arch::ArchConfig> configs;
  if (o.arch == "all") {
    for (auto name : arch::kArchNames) configs.push_back(arch::parse_arch(name));
  } else {
    configs.push_back(parse_arch_or_usage(o.arch));
  }

  // Independent machines; print in fixed order regardless of completion.
  std::vector<std::future<arch::VerificationReport>> jobs;
  for (const auto& c : configs) {
    jobs.push_back(std::async(std::launch::async, [c, &o] {
      return arch::verify_vs_reference(c, static_cast<std::size_t>(o.n),
                                       o.seed);
    }));
  }
  std::size_t passed = 0;
  for (auto& job : jobs) {
    const auto report = job.get();
    passed += report.passed() ? 1 : 0;
    out << arch::describe(report) << '\n';
  }
  out << passed << '/' << configs.size() << " pass\n";
  return passed == configs.size() ? kExitOk : kExitVerifyFailed;
}

int cmd_perf_report(const Options& o, std::ostream& out) {
  if (o.format != "text" && o.format != "csv") {
    throw UsageError("format must be text or csv");
  }
  auto file = open_input(o.inputs_file);
  const auto inputs = perf::read_inputs(file);
  const auto rows = perf::build_report(inputs);
  if (o.format == "csv") {
    perf::write_csv(out, rows);
  } else {
    perf::write_text(out, rows);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"SIMON64/128 cipher, datapath simulator and performance model",
               "simon64"};
  app.require_subcommand(1);
  Options o;

  auto add_key = [&o](CLI::App* sub) {
    sub->add_option("--key", o.key, "master key k3 k2 k1 k0 (hex words)")
        ->expected(kKeyWords)
        ->required();
  };

  auto* encrypt = app.add_subcommand("encrypt", "encrypt one block");
  auto* decrypt = app.add_subcommand("decrypt", "decrypt one block");
  for (auto* sub : {encrypt, decrypt}) {
    add_key(sub);
    sub->add_option("--block", o.block, "block l r (hex words)")
        ->expected(2)
        ->required();
  }

  auto* expand = app.add_subcommand("expand-key", "print the 44 round keys");
  add_key(expand);

  auto* simulate =
      app.add_subcommand("simulate", "run blocks through a datapath model");
  simulate->add_option("--arch", o.arch, "architecture name")->required();
  add_key(simulate);
  simulate->add_option("--mode", o.mode, "encrypt or decrypt");
  simulate->add_option("--blocks", o.blocks_file, "file of \"l r\" lines")
      ->required();
  simulate->add_option("--trace", o.trace, "signals to log")->delimiter(',');
  simulate->add_option("--trace-out", o.trace_out, "trace output file");

  auto* verify =
      app.add_subcommand("verify", "check datapaths against the cipher");
  verify->add_option("--arch", o.arch, "architecture name or 'all'");
  verify->add_option("--n", o.n, "vectors per architecture");
  verify->add_option("--seed", o.seed, "random seed");

  auto* perf = app.add_subcommand("perf-report", "throughput/area tables");
  perf->add_option("--inputs", o.inputs_file, "label,area_slices,tclk_ns file")
      ->required();
  perf->add_option("--format", o.format, "text or csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (encrypt->parsed()) return cmd_cipher(o, false, out);
    if (decrypt->parsed()) return cmd_cipher(o, true, out);
    if (expand->parsed()) return cmd_expand_key(o, out);
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (perf->parsed()) return cmd_perf_report(o, out);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace simon::cli
