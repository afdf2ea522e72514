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
// hoseq command-line entry point: generate, simulate, synth-beams, train, eval
// and suite. Every subcommand reads an optional --config file; flags override
// single config keys, and --set section.key=value overrides any key.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hoseq/hoseq.hpp"

namespace {

using hoseq::ExperimentConfig;

struct Overrides {
  std::string config_path;
  std::vector<std::string> settings;
  std::vector<std::pair<std::string, std::pair<CLI::Option*, std::string*>>> flags;
  std::vector<std::unique_ptr<std::string>> storage;

  void add_config(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "experiment config file (INI)");
    cmd->add_option("--set", settings, "override a config key: section.key=value")->take_all();
  }

  // --name maps to config key `key` ("section.key").
  void add_flag(CLI::App* cmd, const std::string& name, const std::string& key, const std::string& help) {
    storage.push_back(std::make_unique<std::string>());
    auto* opt = cmd->add_option(name, *storage.back(), help);
    flags.push_back({key, {opt, storage.back().get()}});
  }

  ExperimentConfig load() const {
    ExperimentConfig c = config_path.empty() ? ExperimentConfig{} : hoseq::load_config(config_path);
    auto apply = [&](const std::string& key, const std::string& value) {
      const auto dot = key.find('.');
      if (dot == std::string::npos) throw hoseq::UsageError("override '" + key + "' is not of the form section.key");
      hoseq::apply_setting(c, key.substr(0, dot), key.substr(dot + 1), value);
    };
    for (const auto& s : settings) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw hoseq::UsageError("--set expects section.key=value, got '" + s + "'");
      apply(s.substr(0, eq), s.substr(eq + 1));
    }
    for (const auto& [key, flag] : flags) {
      if (flag.first->count() > 0) apply(key, *flag.second);
    }
    return c;
  }
};

std::ofstream open_output(const std::string& path) {
  if (path.empty()) throw hoseq::UsageError("an output path is required");
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hoseq::UsageError("cannot write '" + path + "'");
  return out;
}

std::ifstream open_input(const std::string& path, const std::string& what) {
  if (path.empty()) throw hoseq::UsageError(what + " path is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hoseq::UsageError("cannot open " + what + " '" + path + "'");
  return in;
}

hoseq::TraceFile load_traces(const std::string& path, const ExperimentConfig& config) {
  auto in = open_input(path, "trace file");
  try {
    return hoseq::read_traces(in, config.beams.beams);
  } catch (const hoseq::ParseError& e) {
    throw hoseq::ParseError(path + ": " + e.what());
  }
}

// Trace kind and task kind must agree.
void check_trace_kind(const hoseq::TraceFile& file, const hoseq::TaskSpec& task, const std::string& path) {
  if ((file.kind == hoseq::TraceKind::Beam) != task.beams()) {
    throw hoseq::TaskMismatchError(path + ": " + (task.beams() ? "cell" : "beam") + " traces cannot feed task " +
                                   std::string(hoseq::to_string(task.kind)));
  }
}

hoseq::Dataset dataset_from(const hoseq::TraceFile& file, const hoseq::TaskSpec& task, const std::string& path) {
  try {
    return hoseq::build_dataset(file.traces, task);
  } catch (const hoseq::VocabularyError& e) {
    throw hoseq::VocabularyError(path + ": " + e.what());
  }
}

hoseq::Provenance provenance(const ExperimentConfig& c, std::uint64_t seed) {
  return {hoseq::config_hash(c), std::to_string(seed)};
}

int cmd_generate(const Overrides& o, const std::string& out_path) {
  const ExperimentConfig c = o.load();
  if (out_path.empty()) throw hoseq::UsageError("generate needs --out");
  c.validate();
  const auto d = hoseq::generate_deployment(c.deployment_seed, c.area, c.n_bs, c.radio, c.n_sectors);
  auto out = open_output(out_path);
  hoseq::write_deployment(out, d, hoseq::config_hash(c));
  std::cerr << "wrote " << d.size() << " stations to " << out_path << '\n';
  return 0;
}

int cmd_simulate(const Overrides& o, const std::string& deployment_path, const std::string& out_path) {
  const ExperimentConfig c = o.load();
  if (c.n_steps == 0) throw hoseq::UsageError("n_steps must be at least 1");
  if (out_path.empty()) throw hoseq::UsageError("simulate needs --out");
  c.validate();
  hoseq::Deployment d;
  if (deployment_path.empty()) {
    d = hoseq::generate_deployment(c.deployment_seed, c.area, c.n_bs, c.radio, c.n_sectors);
  } else {
    auto in = open_input(deployment_path, "deployment file");
    try {
      d = hoseq::read_deployment(in);
    } catch (const hoseq::Error& e) {
      throw hoseq::ParseError(deployment_path + ": " + e.what());
    }
  }
  const auto traces = hoseq::run_simulation(d, c.n_ues, c.n_steps, c.mobility, c.a3, c.mobility_seed);
  auto out = open_output(out_path);
  hoseq::write_cell_traces(out, traces, provenance(c, c.mobility_seed));
  std::cerr << "wrote " << traces.size() << " traces to " << out_path << '\n';
  return 0;
}

int cmd_synth_beams(const Overrides& o, const std::string& out_path, bool raw_log) {
  const ExperimentConfig c = o.load();
  if (out_path.empty()) throw hoseq::UsageError("synth-beams needs --out");
  c.validate();
  const auto traces = hoseq::synth_beam_traces(c.beams, c.beam_seed);
  auto out = open_output(out_path);
  if (raw_log) {
    hoseq::write_beam_log(out, traces, provenance(c, c.beam_seed));
  } else {
    hoseq::write_beam_traces(out, traces, provenance(c, c.beam_seed));
  }
  std::cerr << "wrote " << traces.size() << " beam traces to " << out_path << '\n';
  return 0;
}

int cmd_train(const Overrides& o, const std::string& traces_path, const std::string& model_path,
              const std::string& loss_path, const std::string& metadata_path) {
  ExperimentConfig c = o.load();
  if (model_path.empty()) throw hoseq::UsageError("train needs --model");
  c.validate();
  const auto file = load_traces(traces_path, c);
  const hoseq::TaskSpec task = c.resolved_task();
  check_trace_kind(file, task, traces_path);
  const hoseq::Dataset all = dataset_from(file, task, traces_path);
  if (all.empty()) throw hoseq::EmptyDatasetError(traces_path + ": no windows for N=" + std::to_string(task.history) +
                                                  ", K=" + std::to_string(task.horizon));
  const hoseq::Split data = hoseq::split(all, c.train_fraction, c.train.seed);
  const hoseq::TrainResult result = hoseq::train(data.train, data.validation, c.train);

  {
    auto out = open_output(model_path);
    hoseq::save_model(out, result.model);
  }
  if (!loss_path.empty()) {
    auto out = open_output(loss_path);
    hoseq::write_loss_csv(out, result.loss_curve, provenance(c, c.train.seed));
  }
  if (!metadata_path.empty()) {
    auto out = open_output(metadata_path);
    hoseq::write_dataset_metadata(out, task, data.train.size(), data.validation.size(), data.train.dwell_scale,
                                  provenance(c, c.train.seed));
  }
  const auto& m = result.validation.back();
  std::cout << "windows train=" << data.train.size() << " validation=" << data.validation.size() << '\n';
  if (task.regression()) {
    std::cout << "validation mae_steps=" << hoseq::format_double(m.mae_steps) << '\n';
  } else {
    std::cout << "validation accuracy=" << hoseq::format_double(m.accuracy) << '\n';
  }
  return 0;
}

int cmd_eval(const Overrides& o, const std::string& model_path, const std::string& traces_path,
             const std::string& out_path) {
  const ExperimentConfig c = o.load();
  auto min = open_input(model_path, "model file");
  hoseq::RnnModel model;
  try {
    model = hoseq::load_model(min);
  } catch (const hoseq::FormatError& e) {
    throw hoseq::FormatError(model_path + ": " + e.what());
  }
  const auto file = load_traces(traces_path, c);
  check_trace_kind(file, model.task, traces_path);
  hoseq::Dataset d = dataset_from(file, model.task, traces_path);
  d.dwell_scale = model.dwell_scale;
  if (d.empty()) throw hoseq::EmptyDatasetError(traces_path + ": no windows to evaluate");
  const hoseq::Metrics m = hoseq::evaluate(model, d);

  std::ostringstream csv;
  hoseq::write_provenance(csv, provenance(c, c.train.seed));
  csv << hoseq::kMetricsHeader << '\n';
  const bool reg = model.task.regression();
  const auto& per_step = reg ? m.mae_per_step : m.accuracy_per_step;
  for (std::size_t k = 0; k < per_step.size(); ++k) {
    csv << "eval," << model.task.history << ',' << model.task.horizon << ',' << c.train.seed << ',' << (k + 1) << ','
        << (reg ? "mae_steps" : "accuracy") << ',' << hoseq::format_double(per_step[k]) << '\n';
  }
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    auto out = open_output(out_path);
    out << csv.str();
  }
  return 0;
}

int cmd_suite(const Overrides& o, const std::string& out_dir, bool quiet) {
  const ExperimentConfig c = o.load();
  const std::string dir = out_dir.empty() ? c.output_dir : out_dir;
  const auto report = hoseq::run_experiment_suite(c, [quiet](const std::string& s) {
    if (!quiet) std::cerr << s << '\n';
  });
  const auto path = hoseq::write_report(report, dir);
  std::cerr << "wrote " << report.rows.size() << " rows to " << path.string() << '\n';
  return 0;
}

int fail(const std::string& kind, const std::string& message, int code) {
  std::cerr << "error: " << kind << ": " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"handover and beam sequence prediction toolkit"};
  app.set_version_flag("--version", std::string(hoseq::kVersion));
  app.require_subcommand(1);

  Overrides gen_o, sim_o, beam_o, train_o, eval_o, suite_o;
  std::string gen_out, sim_deployment, sim_out, beam_out, train_traces, train_model, train_loss, train_metadata,
      eval_model, eval_traces, eval_out, suite_out;
  bool beam_log = false;
  bool quiet = false;

  auto* gen = app.add_subcommand("generate", "drop base stations and write a deployment file");
  gen_o.add_config(gen);
  gen->add_option("--out", gen_out, "deployment file to write");
  gen_o.add_flag(gen, "--seed", "deployment.seed", "deployment seed");
  gen_o.add_flag(gen, "--n-bs", "deployment.n_bs", "number of base stations");

  auto* sim = app.add_subcommand("simulate", "simulate UE mobility and write cell traces");
  sim_o.add_config(sim);
  sim->add_option("--deployment", sim_deployment, "deployment file (generated from the config if omitted)");
  sim->add_option("--out", sim_out, "trace CSV to write");
  sim_o.add_flag(sim, "--seed", "mobility.seed", "simulation seed");
  sim_o.add_flag(sim, "--n-ues", "mobility.n_ues", "number of UEs");
  sim_o.add_flag(sim, "--n-steps", "mobility.n_steps", "reporting steps per UE");
  sim_o.add_flag(sim, "--hysteresis", "mobility.hysteresis", "A3 hysteresis, dB");
  sim_o.add_flag(sim, "--time-to-trigger", "mobility.time_to_trigger", "A3 time-to-trigger, reports");

  auto* beam = app.add_subcommand("synth-beams", "write synthetic beam traces");
  beam_o.add_config(beam);
  beam->add_option("--out", beam_out, "beam CSV to write");
  beam->add_flag("--log", beam_log, "write a raw timestamp,ue_id,beam_id log instead of collapsed traces");
  beam_o.add_flag(beam, "--seed", "beams.seed", "synthesis seed");
  beam_o.add_flag(beam, "--drift", "beams.drift", "drift probability");

  auto* trn = app.add_subcommand("train", "train a sequence model on a trace file");
  train_o.add_config(trn);
  trn->add_option("--traces", train_traces, "cell or beam trace CSV")->required();
  trn->add_option("--model", train_model, "model file to write");
  trn->add_option("--loss-curve", train_loss, "loss-curve CSV to write");
  trn->add_option("--metadata", train_metadata, "dataset description to write");
  train_o.add_flag(trn, "--task", "task.kind", "cell_to_cell | cell_dwell_to_dwell | cell_dwell_to_cell | beam_to_beam");
  train_o.add_flag(trn, "--history", "task.history", "history length N");
  train_o.add_flag(trn, "--horizon", "task.horizon", "prediction horizon K");
  train_o.add_flag(trn, "--vocabulary", "task.vocabulary", "number of cells or beams (0: from config)");
  train_o.add_flag(trn, "--episodes", "train.episodes", "training episodes");
  train_o.add_flag(trn, "--seed", "train.seed", "split and training seed");

  auto* ev = app.add_subcommand("eval", "evaluate a saved model on a trace file");
  eval_o.add_config(ev);
  ev->add_option("--model", eval_model, "model file")->required();
  ev->add_option("--traces", eval_traces, "cell or beam trace CSV")->required();
  ev->add_option("--out", eval_out, "metrics CSV to write (stdout if omitted)");
  eval_o.add_flag(ev, "--seed", "train.seed", "seed recorded in the metrics rows");

  auto* st = app.add_subcommand("suite", "run an experiment suite");
  suite_o.add_config(st);
  suite_o.add_flag(st, "--suite", "suite.name",
                   "cell_accuracy | convergence | dwell_mae | multivariate | beam_accuracy | drift");
  st->add_option("--out-dir", suite_out, "output directory (default: output.dir)");
  st->add_flag("--quiet", quiet, "no progress messages");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("UsageError", e.what(), 2);
  }

  try {
    if (*gen) return cmd_generate(gen_o, gen_out);
    if (*sim) return cmd_simulate(sim_o, sim_deployment, sim_out);
    if (*beam) return cmd_synth_beams(beam_o, beam_out, beam_log);
    if (*trn) return cmd_train(train_o, train_traces, train_model, train_loss, train_metadata);
    if (*ev) return cmd_eval(eval_o, eval_model, eval_traces, eval_out);
    if (*st) return cmd_suite(suite_o, suite_out, quiet);
  } catch (const hoseq::UsageError& e) {
    return fail(e.kind(), e.what(), 2);
  } catch (const hoseq::Error& e) {
    return fail(e.kind(), e.what(), 1);
  } catch (const std::exception& e) {
    return fail("InternalError", e.what(), 1);
  }
  return 0;
}
