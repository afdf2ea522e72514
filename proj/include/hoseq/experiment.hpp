/* Copyright 2026 The hoseq Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef HOSEQ_EXPERIMENT_HPP
#define HOSEQ_EXPERIMENT_HPP

// Experiment suites. Each suite sweeps a (N, K) grid over several replicate
// seeds and returns metric rows plus one training loss curve per run.
//
// A replicate seed s seeds everything in its run: the deployment, the UE
// simulation (or beam synthesis), the train/validation split and training.
// Traces are shared by all grid points of one seed.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hoseq/config.hpp"
#include "hoseq/dataset.hpp"
#include "hoseq/errors.hpp"
#include "hoseq/geometry_radio.hpp"
#include "hoseq/mobility_sim.hpp"
#include "hoseq/seq2seq.hpp"
#include "hoseq/trace_io.hpp"

namespace hoseq {

inline constexpr std::string_view kMetricsHeader = "suite,N,K,seed,k_step,metric,value";
inline constexpr std::string_view kLossHeader = "episode,split,loss";

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cell_accuracy", "convergence", "dwell_mae",
                                              "multivariate",  "beam_accuracy", "drift"};
  return names;
}

// k_step 0 holds the mean over the horizon.
struct MetricRow {
  std::string suite;
  std::size_t history = 0;
  std::size_t horizon = 0;
  std::uint64_t seed = 0;
  std::size_t k_step = 0;
  std::string metric;
  double value = 0.0;
};

struct LossCurve {
  std::string label;  // file stem, unique within a report
  std::uint64_t seed = 0;
  std::vector<double> train_loss;
};

struct ExperimentReport {
  std::string suite;
  std::string config_hash;
  std::vector<std::uint64_t> seeds;
  std::vector<MetricRow> rows;
  std::vector<LossCurve> loss_curves;
};

struct SuiteGrid {
  std::vector<std::size_t> history;
  std::vector<std::size_t> horizon;
};

inline SuiteGrid default_grid(std::string_view suite) {
  if (suite == "cell_accuracy") return {{3, 5, 7, 9, 11, 13}, {1, 2}};
  if (suite == "convergence") return {{3}, {1}};
  if (suite == "dwell_mae") return {{3, 5, 7, 9, 11, 13}, {1}};
  if (suite == "multivariate") return {{3, 9, 13}, {1, 2}};
  if (suite == "beam_accuracy") return {{1, 2, 3, 4, 5}, {1}};
  if (suite == "drift") return {{3}, {1}};
  throw UsageError("unknown suite '" + std::string(suite) + "'");
}

inline SuiteGrid resolve_grid(const ExperimentConfig& config) {
  SuiteGrid g = default_grid(config.suite.name);
  if (config.suite.name == "convergence") g = {{config.task.history}, {config.task.horizon}};
  if (!config.suite.history_values.empty()) g.history = config.suite.history_values;
  if (!config.suite.horizon_values.empty()) g.horizon = config.suite.horizon_values;
  return g;
}

inline std::vector<MobilityTrace> simulate_cell_traces(const ExperimentConfig& config, std::uint64_t seed) {
  const Deployment deployment = generate_deployment(seed, config.area, config.n_bs, config.radio, config.n_sectors);
  return run_simulation(deployment, config.n_ues, config.n_steps, config.mobility, config.a3, seed);
}

inline std::vector<MobilityTrace> synth_beams(const ExperimentConfig& config, std::uint64_t seed, double drift) {
  BeamSynthConfig beams = config.beams;
  beams.drift = drift;
  return synth_beam_traces(beams, seed);
}

struct RunResult {
  TrainResult training;
  Split data;
};

inline RunResult train_run(std::span<const MobilityTrace> traces, const TaskSpec& task, const ExperimentConfig& config,
                           std::uint64_t seed, std::size_t episodes) {
  TrainConfig tc = config.train;
  tc.seed = seed;
  tc.episodes = episodes;
  Split data = split(build_dataset(traces, task), config.train_fraction, seed);
  TrainResult training = train(data.train, data.validation, tc);
  return {std::move(training), std::move(data)};
}

using ProgressFn = std::function<void(const std::string&)>;

namespace detail {

inline std::string run_label(std::string_view suite, const TaskSpec& task, std::uint64_t seed) {
  return std::string(suite) + "_" + std::string(to_string(task.kind)) + "_N" + std::to_string(task.history) + "_K" +
         std::to_string(task.horizon) + "_seed" + std::to_string(seed);
}

inline void push_per_step(ExperimentReport& r, const TaskSpec& task, std::uint64_t seed, const std::string& metric,
                          const std::vector<double>& per_step, double mean) {
  r.rows.push_back({r.suite, task.history, task.horizon, seed, 0, metric, mean});
  for (std::size_t k = 0; k < per_step.size(); ++k) {
    r.rows.push_back({r.suite, task.history, task.horizon, seed, k + 1, metric, per_step[k]});
  }
}

}  // namespace detail

inline ExperimentReport run_experiment_suite(const ExperimentConfig& config, const ProgressFn& progress = {}) {
  const std::string& suite = config.suite.name;
  const SuiteGrid grid = resolve_grid(config);
  config.validate();
  if (grid.history.empty() || grid.horizon.empty()) throw InvalidConfig("suite sweep lists must not be empty");

  ExperimentReport report{suite, config_hash(config), config.suite.seeds, {}, {}};
  auto note = [&](const std::string& s) {
    if (progress) progress(s);
  };
  auto task_for = [&](TaskKind kind, std::size_t n, std::size_t k) {
    TaskSpec t = config.resolved_task();
    t.kind = kind;
    t.history = n;
    t.horizon = k;
    if (config.task.vocabulary == 0) t.vocabulary = t.beams() ? config.beams.beams : config.n_bs;
    t.validate();
    return t;
  };
  auto record_curve = [&](const TaskSpec& task, std::uint64_t seed, const TrainResult& tr) {
    report.loss_curves.push_back({detail::run_label(suite, task, seed), seed, tr.loss_curve});
  };

  const bool beam_suite = suite == "beam_accuracy" || suite == "drift";
  for (const std::uint64_t seed : config.suite.seeds) {
    note("seed " + std::to_string(seed) + ": generating traces");
    const std::vector<MobilityTrace> traces =
        beam_suite ? synth_beams(config, seed, 0.0) : simulate_cell_traces(config, seed);

    for (const std::size_t n : grid.history) {
      for (const std::size_t k : grid.horizon) {
        note(suite + " N=" + std::to_string(n) + " K=" + std::to_string(k) + " seed=" + std::to_string(seed));
        if (suite == "cell_accuracy" || suite == "beam_accuracy") {
          const TaskSpec task = task_for(beam_suite ? TaskKind::BeamToBeam : TaskKind::CellToCell, n, k);
          const RunResult run = train_run(traces, task, config, seed, config.train.episodes);
          const Metrics& m = run.training.validation.back();
          detail::push_per_step(report, task, seed, "accuracy", m.accuracy_per_step, m.accuracy);
          record_curve(task, seed, run.training);
        } else if (suite == "convergence") {
          const TaskSpec task = task_for(config.task.kind, n, k);
          const RunResult run = train_run(traces, task, config, seed, config.suite.convergence_episodes);
          const auto& curve = run.training.loss_curve;
          const double at_checkpoint = curve[config.suite.checkpoint - 1];
          const double final_loss = curve.back();
          report.rows.push_back({suite, n, k, seed, 0, "loss@episode=" + std::to_string(config.suite.checkpoint),
                                 at_checkpoint});
          report.rows.push_back({suite, n, k, seed, 0, "loss@episode=" + std::to_string(curve.size()), final_loss});
          report.rows.push_back({suite, n, k, seed, 0, "relative_gap", std::abs(at_checkpoint - final_loss) / final_loss});
          record_curve(task, seed, run.training);
        } else if (suite == "dwell_mae") {
          const TaskSpec task = task_for(TaskKind::CellDwellToDwell, n, k);
          const RunResult run = train_run(traces, task, config, seed, config.train.episodes);
          const Metrics& m = run.training.validation.back();
          detail::push_per_step(report, task, seed, "mae_steps", m.mae_per_step, m.mae_steps);
          record_curve(task, seed, run.training);
        } else if (suite == "multivariate") {
          for (const auto& [kind, metric] : {std::pair{TaskKind::CellToCell, "accuracy_cell"},
                                             std::pair{TaskKind::CellDwellToCell, "accuracy_cell_dwell"}}) {
            const TaskSpec task = task_for(kind, n, k);
            const RunResult run = train_run(traces, task, config, seed, config.train.episodes);
            const Metrics& m = run.training.validation.back();
            detail::push_per_step(report, task, seed, metric, m.accuracy_per_step, m.accuracy);
            record_curve(task, seed, run.training);
          }
        } else {  // drift
          const TaskSpec task = task_for(TaskKind::BeamToBeam, n, k);
          const RunResult run = train_run(traces, task, config, seed, config.train.episodes);
          record_curve(task, seed, run.training);
          for (std::size_t i = 0; i < config.suite.drift_values.size(); ++i) {
            const double drift = config.suite.drift_values[i];
            Metrics m;
            if (drift == 0.0) {
              m = evaluate(run.training.model, run.data.validation);
            } else {
              const auto shifted = synth_beams(config, derive_seed(seed, 1000 + i), drift);
              Dataset d = build_dataset(shifted, task);
              d.dwell_scale = run.training.model.dwell_scale;
              m = evaluate(run.training.model, d);
            }
            detail::push_per_step(report, task, seed, "accuracy@drift=" + format_double(drift), m.accuracy_per_step,
                                  m.accuracy);
          }
        }
      }
    }
  }

  std::stable_sort(report.rows.begin(), report.rows.end(), [](const MetricRow& a, const MetricRow& b) {
    return std::tie(a.history, a.horizon, a.seed) < std::tie(b.history, b.horizon, b.seed);
  });
  return report;
}

inline std::string seed_list(const std::vector<std::uint64_t>& seeds) { return detail::format_value(seeds); }

inline void write_metrics_csv(std::ostream& out, const ExperimentReport& r) {
  write_provenance(out, {r.config_hash, seed_list(r.seeds)});
  out << kMetricsHeader << '\n';
  for (const auto& row : r.rows) {
    out << row.suite << ',' << row.history << ',' << row.horizon << ',' << row.seed << ',' << row.k_step << ','
        << row.metric << ',' << format_double(row.value) << '\n';
  }
}

inline void write_loss_csv(std::ostream& out, const std::vector<double>& train_loss, const Provenance& provenance) {
  write_provenance(out, provenance);
  out << kLossHeader << '\n';
  for (std::size_t e = 0; e < train_loss.size(); ++e) {
    out << (e + 1) << ",train," << format_double(train_loss[e]) << '\n';
  }
}

// <dir>/<suite>_metrics.csv and <dir>/<suite>_loss/<run>.csv. Returns the
// metrics file path.
inline std::filesystem::path write_report(const ExperimentReport& r, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / (r.suite + "_loss"));
  const fs::path metrics = dir / (r.suite + "_metrics.csv");
  {
    std::ofstream out(metrics, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + metrics.string() + "'");
    write_metrics_csv(out, r);
  }
  for (const auto& curve : r.loss_curves) {
    std::ofstream out(dir / (r.suite + "_loss") / (curve.label + ".csv"), std::ios::binary);
    write_loss_csv(out, curve.train_loss, {r.config_hash, std::to_string(curve.seed)});
  }
  return metrics;
}

}  // namespace hoseq

#endif  // HOSEQ_EXPERIMENT_HPP
