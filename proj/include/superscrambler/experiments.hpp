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

#ifndef SUPERSCRAMBLER_EXPERIMENTS_HPP
#define SUPERSCRAMBLER_EXPERIMENTS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "superscrambler/core_model.hpp"
#include "superscrambler/tableau.hpp"

namespace superscrambler {

/// Thrown by the series analyses when the data cannot support the fit.
class AnalysisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::size_t n_qubits = 120;
  std::size_t time_steps = 0;
  std::size_t realizations = 1;
  std::uint64_t rng_seed = 0;
  std::optional<Region> cut; ///< defaults to the first N/2 sites
  std::size_t sample_every = 1;
  std::filesystem::path output; ///< CSV path; empty means no files
  std::size_t max_threads = 0;  ///< 0 means one per hardware thread
  bool check_invariants = true; ///< after every time step

  Region resolved_cut() const;
  /// Throws std::invalid_argument.
  void validate() const;
};

struct EntropySample {
  std::size_t step = 0;
  std::vector<double> values; ///< one per realization, in realization order
  double mean = 0;
  double std_error = 0;
};

struct EntropySeries {
  std::size_t n_qubits = 0;
  std::size_t cut_size = 0;
  std::vector<EntropySample> samples;
};

/// T on sites 1..k, then C3(j, k+j, 2k+j) for j = 1..k, for N = 3k; the
/// order is operator-space application order. With `localized` every C3 is
/// expanded into nearest-neighbour form.
OperatorProgram build_ghz_program(std::size_t n_qubits, bool localized = false);

// Random streams: realization r of a run with seed s draws from
// std::mt19937_64 seeded with splitmix64(s + (r + 1) * 0x9E3779B97F4A7C15).
// Streams are independent of thread count and scheduling.
using Rng = std::mt19937_64;
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t realization_seed(std::uint64_t base_seed, std::size_t realization);

/// One time step: T on a uniform site, then C3 on a uniform window of three
/// adjacent sites with a uniformly chosen control.
std::array<SuperGate, 2> random_step(Rng &rng, std::size_t n_qubits);

/// Called as realizations complete: (completed, total).
using ProgressFn = std::function<void(std::size_t, std::size_t)>;

/// Runs `realizations` independent random circuits from X_1 ... X_N on the
/// tableau, sampling the cut entropy at step 0 and every `sample_every`
/// steps (and at the last step).
EntropySeries run_random_ensemble(const ExperimentConfig &config,
                                  const ProgressFn &progress = {});

/// Same ensemble on the dense oracle (N <= 16); identical random streams.
EntropySeries run_random_ensemble_oracle(const ExperimentConfig &config);

struct OracleCheckResult {
  bool agreed = true;
  std::size_t entropy_comparisons = 0;
  std::size_t stabilizer_comparisons = 0;
  double max_entropy_deviation = 0;
  std::string first_failure;
};

/// Co-evolves tableau and oracle under one random circuit and compares, at
/// step 0 and every `check_every` steps, the entropy of every prefix cut and
/// the stabilizer condition of every tableau row.
OracleCheckResult co_evolve_with_oracle(std::size_t n_qubits, std::size_t time_steps,
                                        std::uint64_t seed, std::size_t check_every,
                                        double tolerance = 1e-6);

/// Mean of the final 10% of samples (at least one).
double plateau_estimate(const EntropySeries &series);

/// Least-squares slope of the mean over the window where it sits between
/// 10% and 50% of the plateau.
double fit_growth_rate(const EntropySeries &series);

/// First step where the mean exceeds threshold_fraction * plateau. Throws
/// AnalysisError if the final 10% still drifts beyond noise.
std::size_t estimate_saturation_time(const EntropySeries &series,
                                     double threshold_fraction = 0.95);

/// Page's mean entropy (bits) for a random pure state split into
/// 2^cut_size and 2^(N - cut_size) dimensions, large-dimension form
/// cut_size - 2^(2 cut_size - N - 1) / ln 2.
double page_value(std::size_t n_qubits, std::size_t cut_size);

/// step,mean_entropy,stderr,realizations with 9 significant digits.
void write_csv(const EntropySeries &series, std::ostream &out);
std::string csv_string(const EntropySeries &series);

/// Config echo, plateau, growth rate, saturation step and Page reference.
/// Analyses that fail are reported as null with an error string.
nlohmann::json summarize(const ExperimentConfig &config, const EntropySeries &series);

/// Summary sidecar next to the CSV: same stem, ".json" extension.
std::filesystem::path summary_path(const std::filesystem::path &csv_path);

/// Writes CSV and summary; returns the files written. Throws
/// std::ios_base::failure on I/O errors.
std::vector<std::filesystem::path> write_outputs(const ExperimentConfig &config,
                                                 const EntropySeries &series);

/// min(requested or hardware threads, $SUPER_SCRAMBLER_THREADS), at least 1.
std::size_t worker_count(std::size_t requested);

} // namespace superscrambler

#endif // SUPERSCRAMBLER_EXPERIMENTS_HPP
