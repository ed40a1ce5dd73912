// Copyright 2026 The Super Scrambler Authors
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

// super_scrambler: command-line front end.
//
// Exit codes: 0 success, 1 verification or assertion failure, 2 usage or
// input error, 3 I/O error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superscrambler/dense_oracle.hpp"
#include "superscrambler/experiments.hpp"
#include "superscrambler/gate_tables.hpp"
#include "superscrambler/gf2.hpp"
#include "superscrambler/program_text.hpp"
#include "superscrambler/run_manifest.hpp"
#include "superscrambler/tableau.hpp"

namespace fs = std::filesystem;
using namespace superscrambler;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<fs::path> manifest_path;
  std::optional<fs::path> replay;

  bool verify_json = false;

  std::size_t ghz_n = 0;
  bool ghz_localized = false;
  std::vector<std::string> ghz_cuts;
  bool ghz_dump = false;

  std::size_t n = 120;
  std::size_t steps = 1000;
  std::size_t reals = 1;
  std::uint64_t seed = 0;
  std::string cut;
  std::size_t sample_every = 1;
  std::string out;
  std::size_t threads = 0;
  bool oracle_check = false;
  bool no_checks = false;
  bool quiet = false;

  fs::path program_file;
  std::vector<std::string> entropy_cuts;
  bool dump_stabilizers = false;

  std::size_t bench_rows = 240;
  std::size_t bench_cols = 120;
  std::size_t bench_trials = 2000;
};

std::string join_cut(const Region &r) { return r.to_string(); }

Region parse_region(const std::string &text, std::size_t n) {
  Region r;
  try {
    r = Region::parse(text);
    r.validate(n);
  } catch (const std::exception &e) {
    throw UsageError("invalid cut '" + text + "': " + e.what());
  }
  return r;
}

void emit_manifest(RunManifest &m, const Options &opt, const std::optional<fs::path> &fallback) {
  m.finished_at = utc_timestamp();
  const auto path = opt.manifest_path ? opt.manifest_path : fallback;
  if (path) {
    m.save(*path);
  } else {
    std::cerr << "manifest: " << m.to_json().dump() << '\n';
  }
}

int cmd_verify(const Options &opt, RunManifest &manifest) {
  manifest.arguments = opt.verify_json ? std::vector<std::string>{"--json"}
                                       : std::vector<std::string>{};
  manifest.config = {{"json", opt.verify_json}};
  const auto report = verify_gate_tables();
  if (opt.verify_json) {
    nlohmann::json j;
    j["passed"] = report.all_passed();
    j["c3_convention"] = report.c3_convention;
    j["alternate_reading_passes"] = report.alternate_reading_passes;
    j["subspace_closed"] = report.subspace_closed;
    j["subspace_leakage"] = report.subspace_leakage;
    j["tolerance"] = kGateTableTolerance;
    for (const auto &c : report.checks) {
      j["checks"].push_back(
          {{"identity", c.name}, {"max_deviation", c.max_deviation}, {"passed", c.passed}});
    }
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto &c : report.checks) {
      std::printf("%s  %-32s max deviation %.3e\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                  c.max_deviation);
    }
    std::printf("%s  C3 preserves X/Y strings        max leakage %.3e\n",
                report.subspace_closed ? "PASS" : "FAIL", report.subspace_leakage);
    std::printf("C3 reading: %s\n", report.c3_convention.c_str());
    std::printf("reverse reading (CX_21 acts first) %s\n",
                report.alternate_reading_passes ? "also reproduces every row"
                                                : "fails the table");
  }
  emit_manifest(manifest, opt, std::nullopt);
  return report.all_passed() ? kOk : kFailure;
}

int cmd_ghz(const Options &opt, RunManifest &manifest) {
  if (opt.ghz_n == 0 || opt.ghz_n % 3 != 0) {
    throw UsageError("ghz needs --n divisible by 3, got " + std::to_string(opt.ghz_n));
  }
  const std::size_t n = opt.ghz_n;
  const std::size_t k = n / 3;
  std::vector<Region> cuts;
  for (const auto &c : opt.ghz_cuts) {
    cuts.push_back(parse_region(c, n));
  }
  if (cuts.empty()) {
    for (std::size_t b = 0; b < 3; ++b) {
      std::vector<std::size_t> sites;
      for (std::size_t j = 0; j < k; ++j) {
        sites.push_back(b * k + j);
      }
      cuts.push_back(Region::from_sites(sites));
    }
  }

  manifest.arguments = {"--n", std::to_string(n)};
  if (opt.ghz_localized) {
    manifest.arguments.push_back("--localized");
  }
  for (const auto &c : cuts) {
    manifest.arguments.insert(manifest.arguments.end(), {"--cut", join_cut(c)});
  }
  if (opt.ghz_dump) {
    manifest.arguments.push_back("--dump-stabilizers");
  }
  manifest.config = {{"n", n}, {"localized", opt.ghz_localized}};

  const auto program = build_ghz_program(n, opt.ghz_localized);
  auto tableau = SuperStabilizerTableau::all_x(n);
  tableau.apply_program(program);
  tableau.check_invariants();

  std::printf("N = %zu, k = %zu, gates = %zu%s\n", n, k, program.size(),
              opt.ghz_localized ? " (localized)" : "");
  for (const auto &c : cuts) {
    std::printf("entropy[%s] = %zu\n", c.to_string().c_str(), entropy(tableau, c));
  }
  if (opt.ghz_dump) {
    std::cout << dump_stabilizers(tableau);
  }
  emit_manifest(manifest, opt, std::nullopt);
  return kOk;
}

int cmd_random(const Options &opt, RunManifest &manifest) {
  ExperimentConfig cfg;
  cfg.n_qubits = opt.n;
  cfg.time_steps = opt.steps;
  cfg.realizations = opt.reals;
  cfg.rng_seed = opt.seed;
  cfg.sample_every = opt.sample_every;
  cfg.max_threads = opt.threads;
  cfg.check_invariants = !opt.no_checks;
  cfg.output = opt.out;
  if (!opt.cut.empty()) {
    cfg.cut = parse_region(opt.cut, opt.n);
  }
  try {
    cfg.validate();
  } catch (const std::exception &e) {
    throw UsageError(e.what());
  }
  if (opt.oracle_check && opt.n > OperatorWavefunctiond::kMaxQubits) {
    throw UsageError("--oracle-check supports --n up to " +
                     std::to_string(OperatorWavefunctiond::kMaxQubits));
  }

  manifest.seed = opt.seed;
  manifest.arguments = {"--n",    std::to_string(opt.n),     "--steps",
                        std::to_string(opt.steps),           "--reals",
                        std::to_string(opt.reals),           "--seed",
                        std::to_string(opt.seed),            "--cut",
                        cfg.resolved_cut().to_string(),      "--sample-every",
                        std::to_string(opt.sample_every)};
  if (!opt.out.empty()) {
    manifest.arguments.insert(manifest.arguments.end(), {"--out", opt.out});
  }
  if (opt.oracle_check) {
    manifest.arguments.push_back("--oracle-check");
  }
  if (opt.no_checks) {
    manifest.arguments.push_back("--no-invariant-checks");
  }
  manifest.config = summarize(cfg, EntropySeries{})["config"];

  ProgressFn progress;
  if (!opt.quiet) {
    progress = [](std::size_t done, std::size_t total) {
      std::fprintf(stderr, "\rrealizations %zu/%zu", done, total);
      if (done == total) {
        std::fputc('\n', stderr);
      }
    };
  }
  const auto series = run_random_ensemble(cfg, progress);

  int status = kOk;
  if (opt.oracle_check) {
    const auto exact = run_random_ensemble_oracle(cfg);
    double worst = 0;
    for (std::size_t k = 0; k < series.samples.size(); ++k) {
      worst = std::max(worst, std::abs(series.samples[k].mean - exact.samples[k].mean));
    }
    bool agreed = worst <= 1e-6;
    std::string failure;
    for (std::size_t r = 0; r < cfg.realizations && agreed; ++r) {
      const auto res = co_evolve_with_oracle(cfg.n_qubits, cfg.time_steps,
                                             realization_seed(cfg.rng_seed, r), cfg.sample_every);
      if (!res.agreed) {
        agreed = false;
        failure = "realization " + std::to_string(r) + ": " + res.first_failure;
      }
    }
    std::printf("oracle check: %s (max ensemble-mean deviation %.3e)%s%s\n",
                agreed ? "agree" : "MISMATCH", worst, failure.empty() ? "" : ", ",
                failure.c_str());
    if (!agreed) {
      status = kFailure;
    }
  }

  const auto summary = summarize(cfg, series);
  if (opt.out.empty()) {
    write_csv(series, std::cout);
  } else {
    for (const auto &f : write_outputs(cfg, series)) {
      manifest.add_output(f);
    }
  }
  auto show = [&](const char *label, const char *key) {
    if (summary[key].is_null()) {
      std::fprintf(stderr, "%s: n/a (%s)\n", label,
                   summary[std::string(key) + "_error"].get<std::string>().c_str());
    } else {
      std::fprintf(stderr, "%s: %s\n", label, summary[key].dump().c_str());
    }
  };
  show("plateau", "plateau");
  show("growth rate", "growth_rate");
  show("saturation step", "saturation_step");
  show("page value", "page_value");

  std::optional<fs::path> fallback;
  if (!opt.out.empty()) {
    fs::path p = opt.out;
    p.replace_extension(".manifest.json");
    fallback = p;
  }
  emit_manifest(manifest, opt, fallback);
  return status;
}

int cmd_run_program(const Options &opt, RunManifest &manifest) {
  OperatorProgram program(1);
  try {
    program = load_program(opt.program_file);
  } catch (const ProgramParseError &e) {
    throw UsageError(opt.program_file.string() + ": " + e.what());
  }
  const std::size_t n = program.n_qubits();
  std::vector<Region> cuts;
  for (const auto &c : opt.entropy_cuts) {
    cuts.push_back(parse_region(c, n));
  }

  manifest.arguments = {opt.program_file.string()};
  for (const auto &c : cuts) {
    manifest.arguments.insert(manifest.arguments.end(), {"--entropy-cuts", c.to_string()});
  }
  if (opt.dump_stabilizers) {
    manifest.arguments.push_back("--dump-stabilizers");
  }
  manifest.config = {{"file", opt.program_file.string()},
                     {"program_sha256", sha256_file(opt.program_file)}};

  auto tableau = SuperStabilizerTableau::all_x(n);
  tableau.apply_program(program);
  tableau.check_invariants();

  if (cuts.empty() && !opt.dump_stabilizers) {
    for (std::size_t p = 1; p < n; ++p) {
      cuts.push_back(Region::prefix(p));
    }
  }
  for (const auto &c : cuts) {
    std::printf("entropy[%s] = %zu\n", c.to_string().c_str(), entropy(tableau, c));
  }
  if (opt.dump_stabilizers) {
    std::cout << dump_stabilizers(tableau);
  }
  emit_manifest(manifest, opt, std::nullopt);
  return kOk;
}

int cmd_rank_bench(const Options &opt, RunManifest &manifest) {
  manifest.seed = opt.seed;
  manifest.arguments = {"--rows",   std::to_string(opt.bench_rows),   "--cols",
                        std::to_string(opt.bench_cols), "--trials",
                        std::to_string(opt.bench_trials), "--seed",
                        std::to_string(opt.seed)};
  manifest.config = {{"rows", opt.bench_rows}, {"cols", opt.bench_cols},
                     {"trials", opt.bench_trials}};

  Rng rng(opt.seed);
  std::bernoulli_distribution bit(0.5);
  std::vector<BitMatrix> inputs;
  const std::size_t distinct = std::min<std::size_t>(opt.bench_trials, 64);
  for (std::size_t k = 0; k < distinct; ++k) {
    BitMatrix m(opt.bench_rows, opt.bench_cols);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m.set(r, c, bit(rng));
      }
    }
    inputs.push_back(std::move(m));
  }
  std::size_t checksum = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t t = 0; t < opt.bench_trials; ++t) {
    checksum += gf2_rank(inputs[t % distinct]);
  }
  const auto elapsed = std::chrono::duration<double, std::micro>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::printf("gf2_rank %zux%zu: %.3f us per call over %zu calls (rank sum %zu)\n",
              opt.bench_rows, opt.bench_cols, elapsed / double(opt.bench_trials),
              opt.bench_trials, checksum);
  emit_manifest(manifest, opt, std::nullopt);
  return kOk;
}

int run(std::vector<std::string> args);

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Replaces `--config FILE` with the flags the file names. A key already given
// as a flag on the command line is skipped, so flags win over the file.
std::vector<std::string> expand_config(const std::vector<std::string> &args) {
  auto it = std::find_if(args.begin(), args.end(), [](const std::string &a) {
    return a == "--config" || a.rfind("--config=", 0) == 0;
  });
  if (it == args.end()) {
    return args;
  }
  fs::path path;
  auto end = it + 1;
  if (*it == "--config") {
    if (end == args.end()) {
      throw UsageError("--config needs a file");
    }
    path = *end++;
  } else {
    path = it->substr(9);
  }
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot open config file " + path.string());
  }
  auto given = [&](const std::string &flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string &a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  std::vector<std::string> expanded;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path.string() + ": line " + std::to_string(number) +
                       ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string flag = "--" + key;
    if (key.empty() || key == "config" || given(flag)) {
      continue;
    }
    if (value == "true") {
      expanded.push_back(flag);
    } else if (value != "false") {
      expanded.insert(expanded.end(), {flag, value});
    }
  }
  std::vector<std::string> out(args.begin(), it);
  out.insert(out.end(), expanded.begin(), expanded.end());
  out.insert(out.end(), end, args.end());
  return out;
}

int run_replay(const fs::path &path) {
  const auto m = RunManifest::load(path);
  std::vector<std::string> args = {m.subcommand};
  args.insert(args.end(), m.arguments.begin(), m.arguments.end());
  return run(args);
}

int run(std::vector<std::string> args) {
  Options opt;
  CLI::App app{"Super-Clifford operator scrambling simulator"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(0, 1);
  app.add_option("--manifest", opt.manifest_path, "Write the run manifest here");
  app.add_option("--replay", opt.replay, "Re-run the invocation recorded in a manifest")
      ->check(CLI::ExistingFile);

  auto *verify = app.add_subcommand("verify", "Check the gate algebra in state space");
  verify->add_flag("--json", opt.verify_json, "Machine-readable report");

  auto *ghz = app.add_subcommand("ghz", "Deterministic GHZ-entangling circuit");
  ghz->add_option("--n", opt.ghz_n, "Number of qubits (multiple of 3)")->required();
  ghz->add_flag("--localized", opt.ghz_localized, "Nearest-neighbour SWAP expansion");
  ghz->add_option("--cut", opt.ghz_cuts, "Region such as 1-4,7 (repeatable)");
  ghz->add_flag("--dump-stabilizers", opt.ghz_dump, "Print the final stabilizers");

  auto *random = app.add_subcommand("random", "Random T/C3 circuit ensemble");
  std::string config_file;
  random->add_option("--config", config_file, "Flat key=value file mirroring flag names");
  random->add_option("--n", opt.n, "Number of qubits")->capture_default_str();
  random->add_option("--steps", opt.steps, "Time steps")->capture_default_str();
  random->add_option("--reals", opt.reals, "Realizations")->capture_default_str();
  random->add_option("--seed", opt.seed, "Base RNG seed")->capture_default_str();
  random->add_option("--cut", opt.cut, "Region (default first N/2 sites)");
  random->add_option("--sample-every", opt.sample_every, "Sampling stride")
      ->capture_default_str();
  random->add_option("--out", opt.out, "CSV path (summary and manifest written alongside)");
  random->add_option("--threads", opt.threads, "Worker threads (0 = hardware)");
  random->add_flag("--oracle-check", opt.oracle_check, "Co-run the dense oracle (N <= 16)");
  random->add_flag("--no-invariant-checks", opt.no_checks, "Skip per-step invariant checks");
  random->add_flag("--quiet", opt.quiet, "No progress counter");

  auto *runp = app.add_subcommand("run-program", "Run a program file on the tableau");
  runp->add_option("file", opt.program_file, "Program text file")->required();
  runp->add_option("--entropy-cuts", opt.entropy_cuts, "Regions to report (repeatable)");
  runp->add_flag("--dump-stabilizers", opt.dump_stabilizers, "Print the final stabilizers");

  auto *bench = app.add_subcommand("rank-bench", "GF(2) rank micro-benchmark");
  bench->add_option("--rows", opt.bench_rows)->capture_default_str();
  bench->add_option("--cols", opt.bench_cols)->capture_default_str();
  bench->add_option("--trials", opt.bench_trials)->capture_default_str();
  bench->add_option("--seed", opt.seed)->capture_default_str();

  try {
    args = expand_config(args);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::ios_base::failure &e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  if (opt.replay) {
    return run_replay(*opt.replay);
  }

  RunManifest manifest;
  manifest.started_at = utc_timestamp();
  try {
    if (verify->parsed()) {
      manifest.subcommand = "verify";
      return cmd_verify(opt, manifest);
    }
    if (ghz->parsed()) {
      manifest.subcommand = "ghz";
      return cmd_ghz(opt, manifest);
    }
    if (random->parsed()) {
      manifest.subcommand = "random";
      return cmd_random(opt, manifest);
    }
    if (runp->parsed()) {
      manifest.subcommand = "run-program";
      return cmd_run_program(opt, manifest);
    }
    if (bench->parsed()) {
      manifest.subcommand = "rank-bench";
      return cmd_rank_bench(opt, manifest);
    }
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::ios_base::failure &e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  std::cerr << app.help();
  return kUsage;
}

} // namespace

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args));
}
