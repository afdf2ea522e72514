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
#ifndef HOSEQ_SEQ2SEQ_HPP
#define HOSEQ_SEQ2SEQ_HPP

// Recurrent sequence-to-sequence predictor.
//
//   h_0 = 0
//   h_t = relu(x_t W_in + h_{t-1} W_rec + b)            t = 1..N
//   y_k = softmax(h_N U_k + c_k)    classification heads k = 1..K
//   y_k = sigmoid(h_N U_k + c_k)    dwell regression heads
//
// Row-vector convention throughout: a batch is B rows, W_in is F x H, W_rec is
// H x H and every head U_k is H x O. Gradients come from exact
// backpropagation through time and parameters are updated with Adam.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hoseq/dataset.hpp"
#include "hoseq/errors.hpp"
#include "hoseq/rng.hpp"

namespace hoseq {

inline constexpr double kProbabilityFloor = 1e-12;

// Every parameter block is a dense matrix (biases are 1 x n) so that
// parameters, gradients and optimizer moments can be zipped by block index.
struct RnnWeights {
  Eigen::MatrixXd input;      // F x H
  Eigen::MatrixXd recurrent;  // H x H
  Eigen::MatrixXd bias;       // 1 x H
  std::vector<Eigen::MatrixXd> head_weights;  // K of H x O
  std::vector<Eigen::MatrixXd> head_biases;   // K of 1 x O

  std::vector<Eigen::MatrixXd*> blocks() {
    std::vector<Eigen::MatrixXd*> out{&input, &recurrent, &bias};
    for (auto& w : head_weights) out.push_back(&w);
    for (auto& b : head_biases) out.push_back(&b);
    return out;
  }
  std::vector<const Eigen::MatrixXd*> blocks() const {
    std::vector<const Eigen::MatrixXd*> out{&input, &recurrent, &bias};
    for (const auto& w : head_weights) out.push_back(&w);
    for (const auto& b : head_biases) out.push_back(&b);
    return out;
  }

  RnnWeights zeros_like() const {
    RnnWeights z = *this;
    for (auto* b : z.blocks()) b->setZero();
    return z;
  }

  std::size_t parameter_count() const {
    std::size_t n = 0;
    for (const auto* b : blocks()) n += static_cast<std::size_t>(b->size());
    return n;
  }

  bool all_finite() const {
    for (const auto* b : blocks()) {
      if (!b->allFinite()) return false;
    }
    return true;
  }
};

struct RnnModel {
  TaskSpec task;
  std::size_t hidden = 100;
  RnnWeights weights;
  std::optional<DwellScale> dwell_scale;
  // Bumped by every parameter update; forward passes remember it so a stale
  // cache cannot be fed to backward.
  std::uint64_t revision = 0;
};

inline RnnModel init_model(const TaskSpec& task, std::size_t hidden, std::uint64_t seed, double init_scale) {
  task.validate();
  if (hidden < 1) throw InvalidConfig("hidden size must be >= 1");
  const auto f = static_cast<Eigen::Index>(task.feature_width());
  const auto h = static_cast<Eigen::Index>(hidden);
  const auto o = static_cast<Eigen::Index>(task.output_width());

  Rng rng(seed);
  auto draw = [&](Eigen::Index rows, Eigen::Index cols) {
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rng.uniform(-init_scale, init_scale);
    }
    return m;
  };

  RnnModel model{task, hidden, {}, std::nullopt, 0};
  model.weights.input = draw(f, h);
  model.weights.recurrent = draw(h, h);
  model.weights.bias = Eigen::MatrixXd::Zero(1, h);
  for (std::size_t k = 0; k < task.horizon; ++k) {
    model.weights.head_weights.push_back(draw(h, o));
    model.weights.head_biases.push_back(Eigen::MatrixXd::Zero(1, o));
  }
  return model;
}

inline void softmax_rows(Eigen::MatrixXd& z) {
  for (Eigen::Index r = 0; r < z.rows(); ++r) {
    auto row = z.row(r);
    row.array() -= row.maxCoeff();
    row = row.array().exp().matrix();
    row /= row.sum();
  }
}

inline double sigmoid(double z) {
  return z >= 0.0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
}

// Cache of one forward pass over a batch, consumed by backward.
struct ForwardPass {
  std::uint64_t revision = 0;
  std::vector<Eigen::MatrixXd> inputs;   // N of B x F
  std::vector<Eigen::MatrixXd> hidden;   // N + 1 of B x H; hidden[0] is the zero state
  std::vector<Eigen::MatrixXd> outputs;  // K of B x O: probabilities, or sigmoid values

  Eigen::Index batch() const { return inputs.empty() ? 0 : inputs.front().rows(); }
  const Eigen::MatrixXd& final_state() const { return hidden.back(); }
};

inline ForwardPass forward(const RnnModel& model, std::vector<Eigen::MatrixXd> steps) {
  const auto& w = model.weights;
  if (steps.size() != model.task.history) {
    throw ShapeError("expected " + std::to_string(model.task.history) + " time steps, got " +
                     std::to_string(steps.size()));
  }
  const Eigen::Index b = steps.front().rows();
  for (const auto& x : steps) {
    if (x.cols() != w.input.rows() || x.rows() != b) {
      throw ShapeError("feature matrix is " + std::to_string(x.rows()) + " x " + std::to_string(x.cols()) +
                       ", model expects " + std::to_string(b) + " x " + std::to_string(w.input.rows()));
    }
  }

  ForwardPass pass;
  pass.revision = model.revision;
  pass.hidden.reserve(steps.size() + 1);
  pass.hidden.push_back(Eigen::MatrixXd::Zero(b, w.recurrent.rows()));
  for (const auto& x : steps) {
    Eigen::MatrixXd z = x * w.input;
    z.noalias() += pass.hidden.back() * w.recurrent;
    z.rowwise() += w.bias.row(0);
    pass.hidden.push_back(z.cwiseMax(0.0));
  }
  pass.inputs = std::move(steps);

  for (std::size_t k = 0; k < w.head_weights.size(); ++k) {
    Eigen::MatrixXd z = pass.final_state() * w.head_weights[k];
    z.rowwise() += w.head_biases[k].row(0);
    if (model.task.regression()) {
      z = z.unaryExpr([](double v) { return sigmoid(v); });
    } else {
      softmax_rows(z);
    }
    pass.outputs.push_back(std::move(z));
  }
  return pass;
}

// Single window given as an N x F feature matrix.
inline ForwardPass forward(const RnnModel& model, const Eigen::MatrixXd& features) {
  if (features.rows() != static_cast<Eigen::Index>(model.task.history)) {
    throw ShapeError("feature matrix has " + std::to_string(features.rows()) + " rows, model expects N = " +
                     std::to_string(model.task.history));
  }
  std::vector<Eigen::MatrixXd> steps;
  for (Eigen::Index t = 0; t < features.rows(); ++t) steps.emplace_back(features.row(t));
  return forward(model, std::move(steps));
}

// Mean over heads of -log(max(p_k[target_k], floor)); targets are 1-based.
inline double loss_cce(std::span<const Eigen::RowVectorXd> predicted, std::span<const int> targets) {
  if (predicted.size() != targets.size() || predicted.empty()) throw ShapeError("one target per head required");
  double s = 0.0;
  for (std::size_t k = 0; k < predicted.size(); ++k) {
    s -= std::log(std::max(predicted[k](targets[k] - 1), kProbabilityFloor));
  }
  return s / static_cast<double>(predicted.size());
}

inline double loss_mae(std::span<const double> predicted, std::span<const double> targets) {
  if (predicted.size() != targets.size() || predicted.empty()) throw ShapeError("one target per head required");
  double s = 0.0;
  for (std::size_t k = 0; k < predicted.size(); ++k) s += std::abs(predicted[k] - targets[k]);
  return s / static_cast<double>(predicted.size());
}

// Batch targets, B x K: 1-based class ids or normalized dwell values.
struct Targets {
  Eigen::MatrixXi classes;
  Eigen::MatrixXd values;
};

inline Targets make_targets(std::span<const Window* const> batch, const TaskSpec& task,
                            const std::optional<DwellScale>& scale) {
  const auto b = static_cast<Eigen::Index>(batch.size());
  const auto k = static_cast<Eigen::Index>(task.horizon);
  Targets t;
  if (task.regression()) {
    if (!scale) throw InvalidConfig("dwell regression needs a dwell scale");
    t.values.resize(b, k);
    for (Eigen::Index r = 0; r < b; ++r) {
      const auto& labels = batch[static_cast<std::size_t>(r)]->label_dwells;
      if (labels.size() != task.horizon) throw ShapeError("window label count differs from task K");
      for (Eigen::Index j = 0; j < k; ++j) t.values(r, j) = scale->normalize(labels[static_cast<std::size_t>(j)]);
    }
  } else {
    t.classes.resize(b, k);
    for (Eigen::Index r = 0; r < b; ++r) {
      const auto& labels = batch[static_cast<std::size_t>(r)]->label_ids;
      if (labels.size() != task.horizon) throw ShapeError("window label count differs from task K");
      for (Eigen::Index j = 0; j < k; ++j) {
        check_vocabulary(labels[static_cast<std::size_t>(j)], task);
        t.classes(r, j) = labels[static_cast<std::size_t>(j)];
      }
    }
  }
  return t;
}

// Batch mean of the per-window loss (itself the mean over heads).
inline double batch_loss(const ForwardPass& pass, const Targets& targets, const TaskSpec& task) {
  const Eigen::Index b = pass.batch();
  double s = 0.0;
  for (std::size_t k = 0; k < pass.outputs.size(); ++k) {
    const auto& out = pass.outputs[k];
    const auto col = static_cast<Eigen::Index>(k);
    for (Eigen::Index r = 0; r < b; ++r) {
      if (task.regression()) {
        s += std::abs(out(r, 0) - targets.values(r, col));
      } else {
        s -= std::log(std::max(out(r, targets.classes(r, col) - 1), kProbabilityFloor));
      }
    }
  }
  return s / static_cast<double>(b * static_cast<Eigen::Index>(pass.outputs.size()));
}

// Exact gradient of batch_loss with respect to every parameter block.
inline RnnWeights backward(const RnnModel& model, const ForwardPass& pass, const Targets& targets) {
  const auto& w = model.weights;
  if (pass.revision != model.revision) throw CacheError("forward cache predates the latest parameter update");
  if (pass.inputs.size() != model.task.history || pass.outputs.size() != w.head_weights.size() ||
      pass.hidden.size() != pass.inputs.size() + 1 || pass.inputs.front().cols() != w.input.rows()) {
    throw CacheError("forward cache does not match the model dimensions");
  }
  const Eigen::Index b = pass.batch();
  const auto& task = model.task;
  const Eigen::Index target_rows = task.regression() ? targets.values.rows() : targets.classes.rows();
  const Eigen::Index target_cols = task.regression() ? targets.values.cols() : targets.classes.cols();
  if (target_rows != b || target_cols != static_cast<Eigen::Index>(task.horizon)) {
    throw ShapeError("targets must be B x K");
  }

  RnnWeights g = w.zeros_like();
  const double scale = 1.0 / static_cast<double>(b * static_cast<Eigen::Index>(task.horizon));
  Eigen::MatrixXd d_hidden = Eigen::MatrixXd::Zero(b, w.recurrent.rows());

  for (std::size_t k = 0; k < w.head_weights.size(); ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    const Eigen::MatrixXd& out = pass.outputs[k];
    Eigen::MatrixXd d_logits(out.rows(), out.cols());
    for (Eigen::Index r = 0; r < b; ++r) {
      if (task.regression()) {
        const double y = out(r, 0);
        const double diff = y - targets.values(r, col);
        const double sign = diff > 0.0 ? 1.0 : (diff < 0.0 ? -1.0 : 0.0);
        d_logits(r, 0) = sign * y * (1.0 - y) * scale;
      } else {
        const Eigen::Index target = targets.classes(r, col) - 1;
        if (out(r, target) < kProbabilityFloor) {
          d_logits.row(r).setZero();  // clamped loss is flat there
        } else {
          d_logits.row(r) = out.row(r) * scale;
          d_logits(r, target) -= scale;
        }
      }
    }
    g.head_weights[k].noalias() = pass.final_state().transpose() * d_logits;
    g.head_biases[k] = d_logits.colwise().sum();
    d_hidden.noalias() += d_logits * w.head_weights[k].transpose();
  }

  for (std::size_t t = pass.inputs.size(); t-- > 0;) {
    // relu'(z) is 1 exactly where the stored activation is positive.
    const Eigen::MatrixXd d_pre = (pass.hidden[t + 1].array() > 0.0).select(d_hidden, 0.0);
    g.input.noalias() += pass.inputs[t].transpose() * d_pre;
    g.recurrent.noalias() += pass.hidden[t].transpose() * d_pre;
    g.bias += d_pre.colwise().sum();
    d_hidden.noalias() = d_pre * w.recurrent.transpose();
  }
  return g;
}

struct GradientCheck {
  double max_relative_error = 0.0;
  std::size_t parameters = 0;
};

// Compares backward() against central differences of batch_loss, one
// parameter at a time. Relative error is |a - n| / max(|a|, |n|, floor).
inline GradientCheck check_gradients(const RnnModel& model, const std::vector<Eigen::MatrixXd>& steps,
                                     const Targets& targets, double h = 1e-5, double floor = 1e-6) {
  const RnnWeights analytic = backward(model, forward(model, steps), targets);
  RnnModel probe = model;
  auto blocks = probe.weights.blocks();
  const auto grads = analytic.blocks();
  GradientCheck out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Eigen::Index j = 0; j < blocks[i]->size(); ++j) {
      double& p = blocks[i]->data()[j];
      const double saved = p;
      p = saved + h;
      const double up = batch_loss(forward(probe, steps), targets, probe.task);
      p = saved - h;
      const double down = batch_loss(forward(probe, steps), targets, probe.task);
      p = saved;
      const double numeric = (up - down) / (2.0 * h);
      const double a = grads[i]->data()[j];
      const double rel = std::abs(a - numeric) / std::max({std::abs(a), std::abs(numeric), floor});
      out.max_relative_error = std::max(out.max_relative_error, rel);
      ++out.parameters;
    }
  }
  return out;
}

inline double global_norm(const RnnWeights& g) {
  double s = 0.0;
  for (const auto* b : g.blocks()) s += b->squaredNorm();
  return std::sqrt(s);
}

// Rescales g in place so its global L2 norm is at most max_norm; returns the
// norm before clipping.
inline double clip_global_norm(RnnWeights& g, double max_norm) {
  const double n = global_norm(g);
  if (max_norm > 0.0 && n > max_norm) {
    for (auto* b : g.blocks()) *b *= max_norm / n;
  }
  return n;
}

struct AdamState {
  RnnWeights first_moment;
  RnnWeights second_moment;
  std::uint64_t step = 0;
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  static AdamState for_model(const RnnModel& model, double lr = 1e-3) {
    AdamState s;
    s.first_moment = model.weights.zeros_like();
    s.second_moment = model.weights.zeros_like();
    s.lr = lr;
    return s;
  }
};

inline void adam_update(RnnModel& model, const RnnWeights& grads, AdamState& state) {
  auto params = model.weights.blocks();
  const auto g = grads.blocks();
  auto m = state.first_moment.blocks();
  auto v = state.second_moment.blocks();
  if (g.size() != params.size() || m.size() != params.size() || v.size() != params.size()) {
    throw ShapeError("gradient and optimizer state must match the model layout");
  }
  ++state.step;
  const double t = static_cast<double>(state.step);
  const double c1 = 1.0 - std::pow(state.beta1, t);
  const double c2 = 1.0 - std::pow(state.beta2, t);
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (g[i]->rows() != params[i]->rows() || g[i]->cols() != params[i]->cols()) {
      throw ShapeError("gradient block shape differs from parameter block");
    }
    *m[i] = state.beta1 * *m[i] + (1.0 - state.beta1) * *g[i];
    *v[i] = state.beta2 * *v[i] + (1.0 - state.beta2) * g[i]->cwiseAbs2();
    params[i]->array() -=
        state.lr * (m[i]->array() / c1) / ((v[i]->array() / c2).sqrt() + state.epsilon);
  }
  ++model.revision;
}

struct TrainConfig {
  std::size_t episodes = 20;
  std::size_t batch_size = 32;
  double lr = 1e-3;
  std::uint64_t seed = 1;
  double init_scale = 0.08;
  std::size_t hidden = 100;
  double clip_norm = 5.0;  // <= 0 disables clipping

  void validate() const {
    if (episodes < 1) throw InvalidConfig("episodes must be >= 1");
    if (batch_size < 1) throw InvalidConfig("batch_size must be >= 1");
    if (!(lr > 0.0)) throw InvalidConfig("lr must be > 0");
    if (hidden < 1) throw InvalidConfig("hidden must be >= 1");
  }
};

struct Metrics {
  std::vector<double> accuracy_per_step;  // classification, k = 1..K
  double accuracy = 0.0;                  // mean over k
  std::vector<double> mae_per_step;       // regression, de-normalized, k = 1..K
  double mae_steps = 0.0;                 // mean over k
  double mean_loss = 0.0;
  std::size_t windows = 0;
};

// Lowest index wins ties.
inline int argmax_id(const Eigen::Ref<const Eigen::RowVectorXd>& p) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < p.size(); ++i) {
    if (p(i) > p(best)) best = i;
  }
  return static_cast<int>(best) + 1;
}

inline std::vector<const Window*> window_pointers(const Dataset& d) {
  std::vector<const Window*> ptrs;
  ptrs.reserve(d.size());
  for (const auto& w : d.windows) ptrs.push_back(&w);
  return ptrs;
}

inline Metrics evaluate(const RnnModel& model, const Dataset& dataset) {
  if (dataset.empty()) throw EmptyDatasetError("cannot evaluate on an empty dataset");
  if (!(dataset.task == model.task)) throw TaskMismatchError("dataset task differs from the model task");
  const auto& task = model.task;
  const std::vector<const Window*> all = window_pointers(dataset);

  Metrics m;
  m.windows = all.size();
  m.accuracy_per_step.assign(task.regression() ? 0 : task.horizon, 0.0);
  m.mae_per_step.assign(task.regression() ? task.horizon : 0, 0.0);
  std::vector<std::size_t> hits(task.horizon, 0);
  std::vector<double> abs_err(task.horizon, 0.0);
  double loss_sum = 0.0;

  constexpr std::size_t kChunk = 512;
  for (std::size_t begin = 0; begin < all.size(); begin += kChunk) {
    const std::span<const Window* const> chunk(all.data() + begin, std::min(kChunk, all.size() - begin));
    const ForwardPass pass = forward(model, encode_batch(chunk, task, model.dwell_scale));
    const Targets targets = make_targets(chunk, task, model.dwell_scale);
    loss_sum += batch_loss(pass, targets, task) * static_cast<double>(chunk.size());
    for (std::size_t k = 0; k < task.horizon; ++k) {
      const auto& out = pass.outputs[k];
      for (Eigen::Index r = 0; r < out.rows(); ++r) {
        const Window& w = *chunk[static_cast<std::size_t>(r)];
        if (task.regression()) {
          abs_err[k] += std::abs(model.dwell_scale->denormalize(out(r, 0)) - w.label_dwells[k]);
        } else if (argmax_id(out.row(r)) == w.label_ids[k]) {
          ++hits[k];
        }
      }
    }
  }

  const double n = static_cast<double>(all.size());
  m.mean_loss = loss_sum / n;
  if (task.regression()) {
    for (std::size_t k = 0; k < task.horizon; ++k) m.mae_per_step[k] = abs_err[k] / n;
    m.mae_steps = std::accumulate(m.mae_per_step.begin(), m.mae_per_step.end(), 0.0) /
                  static_cast<double>(task.horizon);
  } else {
    for (std::size_t k = 0; k < task.horizon; ++k) m.accuracy_per_step[k] = static_cast<double>(hits[k]) / n;
    m.accuracy = std::accumulate(m.accuracy_per_step.begin(), m.accuracy_per_step.end(), 0.0) /
                 static_cast<double>(task.horizon);
  }
  return m;
}

struct TrainResult {
  RnnModel model;
  std::vector<double> loss_curve;   // mean training loss per episode
  std::vector<Metrics> validation;  // per episode
};

// Dwell head j starts at the median of its normalized training targets, so
// early updates do not drive every hidden unit below zero.
inline void init_dwell_heads(RnnModel& model, const Eigen::MatrixXd& targets) {
  for (Eigen::Index j = 0; j < targets.cols(); ++j) {
    std::vector<double> col(targets.col(j).begin(), targets.col(j).end());
    if (col.empty()) continue;
    const auto mid = col.begin() + static_cast<std::ptrdiff_t>(col.size() / 2);
    std::nth_element(col.begin(), mid, col.end());
    const double p = std::clamp(*mid, 1e-3, 1.0 - 1e-3);
    model.weights.head_biases[static_cast<std::size_t>(j)].setConstant(std::log(p / (1.0 - p)));
  }
}

// One episode is a full shuffled pass over the training windows; the reported
// episode loss is the mean per-window loss seen while making that pass.
inline TrainResult train(const Dataset& train_set, const Dataset& validation_set, const TrainConfig& config) {
  config.validate();
  if (train_set.empty()) throw EmptyDatasetError("training set is empty");
  if (validation_set.empty()) throw EmptyDatasetError("validation set is empty");
  if (!(train_set.task == validation_set.task)) throw TaskMismatchError("train and validation tasks differ");
  const TaskSpec& task = train_set.task;
  if (task.dwell_features() && !train_set.dwell_scale) throw InvalidConfig("training set carries no dwell scale");

  TrainResult result{init_model(task, config.hidden, derive_seed(config.seed, 0), config.init_scale), {}, {}};
  RnnModel& model = result.model;
  model.dwell_scale = train_set.dwell_scale;
  std::vector<const Window*> order = window_pointers(train_set);
  if (task.regression()) init_dwell_heads(model, make_targets(order, task, model.dwell_scale).values);
  AdamState adam = AdamState::for_model(model, config.lr);
  Rng shuffler(derive_seed(config.seed, 1));

  for (std::size_t episode = 0; episode < config.episodes; ++episode) {
    shuffler.shuffle(std::span(order));
    double loss_sum = 0.0;
    for (std::size_t begin = 0; begin < order.size(); begin += config.batch_size) {
      const std::span<const Window* const> batch(order.data() + begin,
                                                  std::min(config.batch_size, order.size() - begin));
      const ForwardPass pass = forward(model, encode_batch(batch, task, model.dwell_scale));
      const Targets targets = make_targets(batch, task, model.dwell_scale);
      loss_sum += batch_loss(pass, targets, task) * static_cast<double>(batch.size());
      RnnWeights grads = backward(model, pass, targets);
      clip_global_norm(grads, config.clip_norm);
      adam_update(model, grads, adam);
    }
    result.loss_curve.push_back(loss_sum / static_cast<double>(order.size()));
    result.validation.push_back(evaluate(model, validation_set));
  }
  return result;
}

struct Prediction {
  std::vector<int> ids;             // classification: argmax per head
  std::vector<double> dwell_steps;  // regression: de-normalized per head
};

inline Prediction predict_sequence(const RnnModel& model, const Eigen::MatrixXd& history) {
  const ForwardPass pass = forward(model, history);
  Prediction p;
  for (const auto& out : pass.outputs) {
    if (model.task.regression()) {
      const DwellScale scale = model.dwell_scale.value_or(DwellScale{});
      p.dwell_steps.push_back(scale.denormalize(out(0, 0)));
    } else {
      p.ids.push_back(argmax_id(out.row(0)));
    }
  }
  return p;
}

}  // namespace hoseq

#endif  // HOSEQ_SEQ2SEQ_HPP
