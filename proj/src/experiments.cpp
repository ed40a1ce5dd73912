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

#include "superscrambler/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "superscrambler/dense_oracle.hpp"

namespace superscrambler {

namespace {

struct TableauBackend {
  explicit TableauBackend(std::size_t n) : tableau(SuperStabilizerTableau::all_x(n)) {}
  void apply(const SuperGate &g) { tableau.apply(g); }
  double entropy_of(const Region &r) const { return double(entropy(tableau, r)); }
  void check() const { tableau.check_invariants(); }

  SuperStabilizerTableau tableau;
};

struct OracleBackend {
  explicit OracleBackend(std::size_t n) : psi(OperatorWavefunctiond::all_x(n)) {}
  void apply(const SuperGate &g) { oracle::apply(psi, g); }
  double entropy_of(const Region &r) const { return oracle::entropy(psi, r); }
  void check() const {
    if (std::abs(psi.norm() - 1.0) > 1e-9) {
      throw std::logic_error("oracle wavefunction lost normalization");
    }
  }

  OperatorWavefunctiond psi;
};

std::vector<std::size_t> sample_steps(const ExperimentConfig &config) {
  std::vector<std::size_t> steps;
  for (std::size_t s = 0; s <= config.time_steps; s += config.sample_every) {
    steps.push_back(s);
  }
  if (steps.back() != config.time_steps) {
    steps.push_back(config.time_steps);
  }
  return steps;
}

template <class Backend>
std::vector<double> run_realization(const ExperimentConfig &config, const Region &cut,
                                    const std::vector<std::size_t> &steps,
                                    std::size_t realization) {
  Rng rng(realization_seed(config.rng_seed, realization));
  Backend backend(config.n_qubits);
  std::vector<double> out;
  out.reserve(steps.size());
  std::size_t next = 0;
  for (std::size_t t = 0; t <= config.time_steps; ++t) {
    if (t > 0) {
      for (const auto &g : random_step(rng, config.n_qubits)) {
        backend.apply(g);
      }
      if (config.check_invariants) {
        backend.check();
      }
    }
    if (next < steps.size() && steps[next] == t) {
      out.push_back(backend.entropy_of(cut));
      ++next;
    }
  }
  return out;
}

template <class Backend>
EntropySeries run_ensemble(const ExperimentConfig &config, const ProgressFn &progress) {
  config.validate();
  const Region cut = config.resolved_cut();
  const auto steps = sample_steps(config);
  std::vector<std::vector<double>> per_realization(config.realizations);

  std::atomic<std::size_t> next{0};
  std::size_t completed = 0;
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t r = next.fetch_add(1);
      if (r >= config.realizations) {
        return;
      }
      try {
        per_realization[r] = run_realization<Backend>(config, cut, steps, r);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) {
          failure = std::current_exception();
        }
        next = config.realizations;
        return;
      }
      std::lock_guard lock(mu);
      ++completed;
      if (progress) {
        progress(completed, config.realizations);
      }
    }
  };

  const std::size_t n_workers = std::min(worker_count(config.max_threads), config.realizations);
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < n_workers; ++k) {
      pool.emplace_back(worker);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  // Reduction in realization order, independent of scheduling.
  EntropySeries series;
  series.n_qubits = config.n_qubits;
  series.cut_size = cut.size();
  const double reals = double(config.realizations);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    EntropySample s;
    s.step = steps[k];
    s.values.reserve(config.realizations);
    for (const auto &values : per_realization) {
      s.values.push_back(values[k]);
    }
    double sum = 0;
    for (double v : s.values) {
      sum += v;
    }
    s.mean = sum / reals;
    if (config.realizations > 1) {
      double ss = 0;
      for (double v : s.values) {
        ss += (v - s.mean) * (v - s.mean);
      }
      s.std_error = std::sqrt(ss / (reals - 1) / reals);
    }
    series.samples.push_back(std::move(s));
  }
  return series;
}

struct LineFit {
  double slope = 0;
  double slope_std_error = 0;
};

LineFit least_squares(const std::vector<EntropySample> &samples, std::size_t begin,
                      std::size_t end) {
  const double n = double(end - begin);
  double mx = 0;
  double my = 0;
  for (std::size_t k = begin; k < end; ++k) {
    mx += double(samples[k].step);
    my += samples[k].mean;
  }
  mx /= n;
  my /= n;
  double sxx = 0;
  double sxy = 0;
  for (std::size_t k = begin; k < end; ++k) {
    const double dx = double(samples[k].step) - mx;
    sxx += dx * dx;
    sxy += dx * (samples[k].mean - my);
  }
  if (sxx == 0) {
    throw AnalysisError("degenerate fit window");
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  if (end - begin > 2) {
    double rss = 0;
    for (std::size_t k = begin; k < end; ++k) {
      const double r =
          samples[k].mean - (my + fit.slope * (double(samples[k].step) - mx));
      rss += r * r;
    }
    fit.slope_std_error = std::sqrt(rss / (n - 2) / sxx);
  }
  return fit;
}

std::size_t tail_begin(const EntropySeries &series) {
  const std::size_t n = series.samples.size();
  return n - std::max<std::size_t>(1, n / 10);
}

std::string format_g9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

} // namespace

Region ExperimentConfig::resolved_cut() const {
  return cut ? *cut : Region::prefix(n_qubits / 2);
}

void ExperimentConfig::validate() const {
  if (n_qubits < 3) {
    throw std::invalid_argument("random circuits need at least 3 qubits");
  }
  if (realizations == 0) {
    throw std::invalid_argument("need at least one realization");
  }
  if (sample_every == 0) {
    throw std::invalid_argument("sample_every must be positive");
  }
  resolved_cut().validate(n_qubits);
}

OperatorProgram build_ghz_program(std::size_t n_qubits, bool localized) {
  if (n_qubits == 0 || n_qubits % 3 != 0) {
    throw std::invalid_argument("GHZ circuit needs N divisible by 3, got " +
                                std::to_string(n_qubits));
  }
  const std::size_t k = n_qubits / 3;
  OperatorProgram program(n_qubits);
  for (std::size_t j = 0; j < k; ++j) {
    program.push_back(make_t(j));
  }
  for (std::size_t j = 0; j < k; ++j) {
    const C3Gate c3{j, k + j, 2 * k + j};
    if (localized) {
      program.append(localize_c3(c3, n_qubits));
    } else {
      program.push_back(c3);
    }
  }
  return program;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t realization_seed(std::uint64_t base_seed, std::size_t realization) {
  return splitmix64(base_seed + (std::uint64_t(realization) + 1) * 0x9E3779B97F4A7C15ULL);
}

std::array<SuperGate, 2> random_step(Rng &rng, std::size_t n_qubits) {
  if (n_qubits < 3) {
    throw std::invalid_argument("random step needs at least 3 qubits");
  }
  std::uniform_int_distribution<std::size_t> site(0, n_qubits - 1);
  std::uniform_int_distribution<std::size_t> window(0, n_qubits - 3);
  std::uniform_int_distribution<std::size_t> offset(0, 2);
  const std::size_t t_site = site(rng);
  const std::size_t w = window(rng);
  const std::size_t c = offset(rng);
  const std::size_t a = c == 0 ? 1 : 0;
  const std::size_t b = c == 2 ? 1 : 2;
  return {make_t(t_site), make_c3(w + c, w + a, w + b)};
}

EntropySeries run_random_ensemble(const ExperimentConfig &config, const ProgressFn &progress) {
  return run_ensemble<TableauBackend>(config, progress);
}

EntropySeries run_random_ensemble_oracle(const ExperimentConfig &config) {
  return run_ensemble<OracleBackend>(config, {});
}

OracleCheckResult co_evolve_with_oracle(std::size_t n_qubits, std::size_t time_steps,
                                        std::uint64_t seed, std::size_t check_every,
                                        double tolerance) {
  if (check_every == 0) {
    throw std::invalid_argument("check_every must be positive");
  }
  OracleCheckResult result;
  Rng rng(seed);
  auto tableau = SuperStabilizerTableau::all_x(n_qubits);
  auto psi = OperatorWavefunctiond::all_x(n_qubits);

  auto fail = [&](const std::string &why) {
    if (result.agreed) {
      result.first_failure = why;
    }
    result.agreed = false;
  };

  for (std::size_t t = 0; t <= time_steps; ++t) {
    if (t > 0) {
      for (const auto &g : random_step(rng, n_qubits)) {
        tableau.apply(g);
        oracle::apply(psi, g);
      }
    }
    if (t % check_every != 0) {
      continue;
    }
    for (std::size_t p = 1; p < n_qubits; ++p) {
      const Region cut = Region::prefix(p);
      const double exact = oracle::entropy(psi, cut);
      const double fast = double(entropy(tableau, cut));
      const double dev = std::abs(exact - fast);
      result.max_entropy_deviation = std::max(result.max_entropy_deviation, dev);
      ++result.entropy_comparisons;
      if (dev > tolerance) {
        fail("step " + std::to_string(t) + ", cut 1-" + std::to_string(p) + ": tableau " +
             format_g9(fast) + " vs oracle " + format_g9(exact));
      }
    }
    for (std::size_t a = 0; a < n_qubits; ++a) {
      ++result.stabilizer_comparisons;
      const auto s = tableau.stabilizer(a);
      if (oracle::check_stabilized(psi, s) == oracle::Stabilized::not_stabilized) {
        fail("step " + std::to_string(t) + ": stabilizer " + s.label() +
             " does not fix the oracle state");
      }
    }
  }
  return result;
}

double plateau_estimate(const EntropySeries &series) {
  if (series.samples.empty()) {
    throw AnalysisError("empty series");
  }
  const std::size_t begin = tail_begin(series);
  double sum = 0;
  for (std::size_t k = begin; k < series.samples.size(); ++k) {
    sum += series.samples[k].mean;
  }
  return sum / double(series.samples.size() - begin);
}

double fit_growth_rate(const EntropySeries &series) {
  if (series.samples.size() < 3) {
    throw AnalysisError("series too short for a growth fit");
  }
  const double plateau = plateau_estimate(series);
  if (!(plateau > 0)) {
    throw AnalysisError("no growth: plateau is zero");
  }
  const auto &s = series.samples;
  std::size_t lo = 0;
  while (lo < s.size() && s[lo].mean < 0.1 * plateau) {
    ++lo;
  }
  std::size_t hi = lo;
  while (hi < s.size() && s[hi].mean <= 0.5 * plateau) {
    ++hi;
  }
  if (hi == s.size()) {
    throw AnalysisError("series never exceeds 50% of its plateau");
  }
  if (hi - lo < 2) {
    throw AnalysisError("growth window has fewer than two samples; sample more often");
  }
  return least_squares(s, lo, hi).slope;
}

std::size_t estimate_saturation_time(const EntropySeries &series, double threshold_fraction) {
  if (series.samples.size() < 2) {
    throw AnalysisError("series too short for a saturation estimate");
  }
  const double plateau = plateau_estimate(series);
  if (!(plateau > 0)) {
    throw AnalysisError("no growth: plateau is zero");
  }
  const std::size_t begin = std::min(tail_begin(series), series.samples.size() - 2);
  const auto fit = least_squares(series.samples, begin, series.samples.size());
  const double span =
      double(series.samples.back().step - series.samples[begin].step);
  const double drift = std::abs(fit.slope) * span;
  const double allowed = std::max(3 * fit.slope_std_error * span, 0.02 * plateau);
  if (drift > allowed) {
    throw AnalysisError("plateau not reached: final 10% still drifts by " + format_g9(drift) +
                        " bits");
  }
  for (const auto &s : series.samples) {
    if (s.mean > threshold_fraction * plateau) {
      return s.step;
    }
  }
  throw AnalysisError("mean never exceeds the saturation threshold");
}

double page_value(std::size_t n_qubits, std::size_t cut_size) {
  if (cut_size == 0 || 2 * cut_size > n_qubits) {
    throw std::invalid_argument("page_value needs 1 <= cut_size <= N/2");
  }
  const double exponent = 2.0 * double(cut_size) - double(n_qubits) - 1.0;
  return double(cut_size) - std::exp2(exponent) / std::numbers::ln2;
}

void write_csv(const EntropySeries &series, std::ostream &out) {
  out << "step,mean_entropy,stderr,realizations\n";
  for (const auto &s : series.samples) {
    out << s.step << ',' << format_g9(s.mean) << ',' << format_g9(s.std_error) << ','
        << s.values.size() << '\n';
  }
}

std::string csv_string(const EntropySeries &series) {
  std::ostringstream out;
  write_csv(series, out);
  return out.str();
}

nlohmann::json summarize(const ExperimentConfig &config, const EntropySeries &series) {
  using nlohmann::json;
  const Region cut = config.resolved_cut();
  json j;
  j["config"] = {
      {"n", config.n_qubits},
      {"steps", config.time_steps},
      {"reals", config.realizations},
      {"seed", config.rng_seed},
      {"cut", cut.to_string()},
      {"sample_every", config.sample_every},
  };
  auto attempt = [&](const char *key, auto &&fn) {
    try {
      j[key] = fn();
    } catch (const std::exception &e) {
      j[key] = nullptr;
      j[std::string(key) + "_error"] = e.what();
    }
  };
  attempt("plateau", [&] { return plateau_estimate(series); });
  attempt("growth_rate", [&] { return fit_growth_rate(series); });
  attempt("saturation_step", [&] { return estimate_saturation_time(series); });
  const std::size_t smaller = std::min(cut.size(), config.n_qubits - cut.size());
  attempt("page_value", [&] { return page_value(config.n_qubits, smaller); });
  return j;
}

std::filesystem::path summary_path(const std::filesystem::path &csv_path) {
  auto p = csv_path;
  p.replace_extension(".json");
  if (p == csv_path) {
    p += ".summary.json";
  }
  return p;
}

std::vector<std::filesystem::path> write_outputs(const ExperimentConfig &config,
                                                 const EntropySeries &series) {
  std::vector<std::filesystem::path> written;
  if (config.output.empty()) {
    return written;
  }
  auto write_file = [&](const std::filesystem::path &path, const std::string &body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::ios_base::failure("cannot open " + path.string() + " for writing");
    }
    out << body;
    out.close();
    if (!out) {
      throw std::ios_base::failure("failed writing " + path.string());
    }
    written.push_back(path);
  };
  write_file(config.output, csv_string(series));
  write_file(summary_path(config.output), summarize(config, series).dump(2) + "\n");
  return written;
}

std::size_t worker_count(std::size_t requested) {
  std::size_t n = requested;
  if (n == 0) {
    n = std::max(1U, std::thread::hardware_concurrency());
  }
  if (const char *env = std::getenv("SUPER_SCRAMBLER_THREADS")) {
    char *end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) {
      n = std::min<std::size_t>(n, cap);
    }
  }
  return std::max<std::size_t>(n, 1);
}

} // namespace superscrambler
