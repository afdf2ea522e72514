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
#ifndef HOSEQ_DATASET_HPP
#define HOSEQ_DATASET_HPP

// Supervised (N-history, K-future) windows over mobility traces, one-hot
// feature encoding with an optional min-max scaled dwell column, seeded
// train/validation split and a synthetic beam-corridor trace generator.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hoseq/errors.hpp"
#include "hoseq/mobility_sim.hpp"
#include "hoseq/rng.hpp"

namespace hoseq {

enum class TaskKind {
  CellToCell,        // x = {c_i}, y = {c_j}
  CellDwellToDwell,  // x = {c_i, d_i}, y = {d_j}
  CellDwellToCell,   // x = {c_i, d_i}, y = {c_j}
  BeamToBeam,        // x = {b_i}, y = {b_j}
};

inline std::string_view to_string(TaskKind k) {
  switch (k) {
    case TaskKind::CellToCell: return "cell_to_cell";
    case TaskKind::CellDwellToDwell: return "cell_dwell_to_dwell";
    case TaskKind::CellDwellToCell: return "cell_dwell_to_cell";
    case TaskKind::BeamToBeam: return "beam_to_beam";
  }
  return "unknown";
}

inline TaskKind parse_task_kind(std::string_view s) {
  for (auto k : {TaskKind::CellToCell, TaskKind::CellDwellToDwell, TaskKind::CellDwellToCell,
                 TaskKind::BeamToBeam}) {
    if (s == to_string(k)) return k;
  }
  throw UsageError("unknown task kind '" + std::string(s) + "'");
}

struct TaskSpec {
  TaskKind kind = TaskKind::CellToCell;
  std::size_t history = 3;      // N
  std::size_t horizon = 1;      // K
  std::size_t vocabulary = 50;  // L: number of cells, or number of beams P

  bool dwell_features() const {
    return kind == TaskKind::CellDwellToDwell || kind == TaskKind::CellDwellToCell;
  }
  bool regression() const { return kind == TaskKind::CellDwellToDwell; }
  bool beams() const { return kind == TaskKind::BeamToBeam; }
  std::size_t feature_width() const { return vocabulary + (dwell_features() ? 1 : 0); }
  std::size_t output_width() const { return regression() ? 1 : vocabulary; }

  void validate() const {
    if (history < 1) throw InvalidConfig("history length N must be >= 1");
    if (horizon < 1) throw InvalidConfig("horizon K must be >= 1");
    if (vocabulary < 2) throw InvalidConfig("vocabulary size L must be >= 2");
  }

  friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
};

struct DwellScale {
  double min = 0.0;
  double max = 1.0;

  double normalize(double steps) const { return std::clamp((steps - min) / (max - min), 0.0, 1.0); }
  double denormalize(double unit) const { return min + unit * (max - min); }

  friend bool operator==(const DwellScale&, const DwellScale&) = default;
};

// Raw ids and dwells; features are encoded on demand because the dwell scale
// is only known after the split.
struct Window {
  std::vector<int> history_ids;
  std::vector<double> history_dwells;  // empty unless the task carries dwell
  std::vector<int> label_ids;          // classification tasks
  std::vector<double> label_dwells;    // regression task, reporting steps

  friend bool operator==(const Window&, const Window&) = default;
};

struct Dataset {
  TaskSpec task;
  std::vector<Window> windows;
  std::optional<DwellScale> dwell_scale;

  std::size_t size() const { return windows.size(); }
  bool empty() const { return windows.empty(); }
};

inline void check_vocabulary(int id, const TaskSpec& task) {
  if (id < 1 || static_cast<std::size_t>(id) > task.vocabulary) {
    throw VocabularyError("id " + std::to_string(id) + " outside vocabulary 1.." +
                          std::to_string(task.vocabulary));
  }
}

inline std::size_t window_count(std::size_t trace_length, const TaskSpec& task) {
  const std::size_t span = task.history + task.horizon;
  return trace_length >= span ? trace_length - span + 1 : 0;
}

// Stride-1 sliding windows inside one trace.
inline std::vector<Window> build_windows(const MobilityTrace& trace, const TaskSpec& task) {
  task.validate();
  for (const auto& e : trace.entries) check_vocabulary(e.id, task);

  const auto& es = trace.entries;
  const std::size_t n = task.history;
  const std::size_t k = task.horizon;
  std::vector<Window> out;
  out.reserve(window_count(es.size(), task));
  for (std::size_t start = 0; start < window_count(es.size(), task); ++start) {
    Window w;
    for (std::size_t i = 0; i < n; ++i) {
      w.history_ids.push_back(es[start + i].id);
      if (task.dwell_features()) w.history_dwells.push_back(static_cast<double>(es[start + i].dwell));
    }
    for (std::size_t j = 0; j < k; ++j) {
      const auto& e = es[start + n + j];
      if (task.regression()) {
        w.label_dwells.push_back(static_cast<double>(e.dwell));
      } else {
        w.label_ids.push_back(e.id);
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

inline Dataset build_dataset(std::span<const MobilityTrace> traces, const TaskSpec& task) {
  Dataset d{task, {}, std::nullopt};
  for (const auto& t : traces) {
    auto ws = build_windows(t, task);
    d.windows.insert(d.windows.end(), std::make_move_iterator(ws.begin()), std::make_move_iterator(ws.end()));
  }
  return d;
}

// Min/max over every dwell a set of windows touches; nullopt when none do.
inline std::optional<DwellScale> fit_dwell_scale(std::span<const Window> windows) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto& w : windows) {
    for (double d : w.history_dwells) lo = std::min(lo, d), hi = std::max(hi, d);
    for (double d : w.label_dwells) lo = std::min(lo, d), hi = std::max(hi, d);
  }
  if (lo > hi) return std::nullopt;
  if (hi <= lo) hi = lo + 1.0;
  return DwellScale{lo, hi};
}

// Row i is one-hot(ids[i]) over L columns, plus the scaled dwell as column L+1
// for dwell-bearing tasks.
inline Eigen::MatrixXd encode_features(std::span<const int> ids, std::span<const double> dwells,
                                       const TaskSpec& task, const std::optional<DwellScale>& scale) {
  if (task.dwell_features() != !dwells.empty() || (!dwells.empty() && dwells.size() != ids.size())) {
    throw ShapeError("dwell values must be given for every step exactly when the task carries dwell");
  }
  if (task.dwell_features() && !scale) throw InvalidConfig("dwell-bearing task needs a dwell scale");
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(ids.size()),
                                            static_cast<Eigen::Index>(task.feature_width()));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    check_vocabulary(ids[i], task);
    const auto row = static_cast<Eigen::Index>(i);
    x(row, ids[i] - 1) = 1.0;
    if (task.dwell_features()) x(row, static_cast<Eigen::Index>(task.vocabulary)) = scale->normalize(dwells[i]);
  }
  return x;
}

// Time-major batch: result[t] is B x F and holds step t of every window.
inline std::vector<Eigen::MatrixXd> encode_batch(std::span<const Window* const> batch, const TaskSpec& task,
                                                 const std::optional<DwellScale>& scale) {
  if (task.dwell_features() && !scale) throw InvalidConfig("dwell-bearing task needs a dwell scale");
  const auto b = static_cast<Eigen::Index>(batch.size());
  std::vector<Eigen::MatrixXd> steps(task.history,
                                     Eigen::MatrixXd::Zero(b, static_cast<Eigen::Index>(task.feature_width())));
  for (Eigen::Index r = 0; r < b; ++r) {
    const Window& w = *batch[static_cast<std::size_t>(r)];
    if (w.history_ids.size() != task.history) throw ShapeError("window history length differs from task N");
    for (std::size_t t = 0; t < task.history; ++t) {
      check_vocabulary(w.history_ids[t], task);
      steps[t](r, w.history_ids[t] - 1) = 1.0;
      if (task.dwell_features()) {
        steps[t](r, static_cast<Eigen::Index>(task.vocabulary)) = scale->normalize(w.history_dwells.at(t));
      }
    }
  }
  return steps;
}

struct Split {
  Dataset train;
  Dataset validation;
};

inline Split split(const Dataset& dataset, double train_fraction, std::uint64_t seed) {
  if (dataset.size() < 2) throw SplitError("need at least 2 windows to split, got " + std::to_string(dataset.size()));
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) throw SplitError("train fraction must lie in (0, 1)");

  const std::size_t n = dataset.size();
  auto n_train = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(n)));
  n_train = std::clamp<std::size_t>(n_train, 1, n - 1);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(std::span(order));

  Split s{{dataset.task, {}, std::nullopt}, {dataset.task, {}, std::nullopt}};
  s.train.windows.reserve(n_train);
  s.validation.windows.reserve(n - n_train);
  for (std::size_t i = 0; i < n; ++i) {
    (i < n_train ? s.train : s.validation).windows.push_back(dataset.windows[order[i]]);
  }
  if (dataset.task.dwell_features() || dataset.task.regression()) {
    s.train.dwell_scale = fit_dwell_scale(s.train.windows);
    s.validation.dwell_scale = s.train.dwell_scale;
  }
  return s;
}

// Synthetic serving-beam traces. Each UE sweeps a fixed corridor (a seeded
// permutation of the P beams) pass after pass, forward or reversed. Per
// reporting step it keeps its beam with `stay_prob`; otherwise it moves to the
// next corridor beam, skips one with probability `noise`, or with probability
// `drift` follows an alternative successor table, which models a changed
// propagation environment. Consecutive duplicates are collapsed.
struct BeamSynthConfig {
  std::size_t n_ues = 10;
  std::size_t n_steps = 4000;
  std::size_t beams = 68;  // P
  double drift = 0.0;
  double noise = 0.1;
  double stay_prob = 0.5;
  double reverse_prob = 0.5;
  std::uint64_t corridor_seed = 1;

  void validate() const {
    if (beams < 2) throw InvalidConfig("beam count P must be >= 2");
    for (double p : {drift, noise, stay_prob, reverse_prob}) {
      if (!(p >= 0.0 && p <= 1.0)) throw InvalidConfig("beam synthesis probabilities must lie in [0, 1]");
    }
    if (drift + noise > 1.0) throw InvalidConfig("drift + noise must not exceed 1");
    if (stay_prob >= 1.0) throw InvalidConfig("stay_prob must be < 1");
  }
};

struct BeamCorridor {
  std::vector<int> path;                  // canonical order of beam ids
  std::vector<std::size_t> position;      // beam id - 1 -> index in path
  std::vector<int> alt_forward;           // beam id - 1 -> drifted successor
  std::vector<int> alt_backward;

  static BeamCorridor make(std::size_t beams, std::uint64_t seed) {
    BeamCorridor c;
    Rng rng(seed);
    c.path.resize(beams);
    std::iota(c.path.begin(), c.path.end(), 1);
    rng.shuffle(std::span(c.path));
    c.position.resize(beams);
    for (std::size_t i = 0; i < beams; ++i) c.position[static_cast<std::size_t>(c.path[i] - 1)] = i;
    auto other = [&](int b) {
      int o = b;
      while (o == b) o = static_cast<int>(rng.below(beams)) + 1;
      return o;
    };
    c.alt_forward.resize(beams);
    c.alt_backward.resize(beams);
    for (std::size_t i = 0; i < beams; ++i) {
      c.alt_forward[i] = other(static_cast<int>(i + 1));
      c.alt_backward[i] = other(static_cast<int>(i + 1));
    }
    return c;
  }
};

inline std::vector<MobilityTrace> synth_beam_traces(const BeamSynthConfig& config, std::uint64_t seed) {
  config.validate();
  const BeamCorridor corridor = BeamCorridor::make(config.beams, config.corridor_seed);
  const auto p = static_cast<std::ptrdiff_t>(config.beams);

  std::vector<MobilityTrace> traces;
  traces.reserve(config.n_ues);
  for (std::size_t u = 0; u < config.n_ues; ++u) {
    Rng rng(derive_seed(seed, u));
    MobilityTrace trace{std::to_string(u + 1), {}};
    std::ptrdiff_t dir = 1;
    std::ptrdiff_t pos = 0;
    auto start_pass = [&] {
      dir = rng.bernoulli(config.reverse_prob) ? -1 : 1;
      pos = dir > 0 ? 0 : p - 1;
    };
    auto emit = [&](int beam) {
      if (!trace.entries.empty() && trace.entries.back().id == beam) {
        ++trace.entries.back().dwell;
      } else {
        trace.entries.push_back({beam, 1});
      }
    };

    start_pass();
    emit(corridor.path[static_cast<std::size_t>(pos)]);
    for (std::size_t step = 1; step < config.n_steps; ++step) {
      if (!rng.bernoulli(config.stay_prob)) {
        const int beam = corridor.path[static_cast<std::size_t>(pos)];
        const double r = rng.uniform();
        if (r < config.drift) {
          const auto& alt = dir > 0 ? corridor.alt_forward : corridor.alt_backward;
          pos = static_cast<std::ptrdiff_t>(corridor.position[static_cast<std::size_t>(alt[static_cast<std::size_t>(beam - 1)] - 1)]);
        } else if (r < config.drift + config.noise) {
          pos += 2 * dir;
        } else {
          pos += dir;
        }
        if (pos < 0 || pos >= p) start_pass();
      }
      emit(corridor.path[static_cast<std::size_t>(pos)]);
    }
    traces.push_back(std::move(trace));
  }
  return traces;
}

}  // namespace hoseq

#endif  // HOSEQ_DATASET_HPP
