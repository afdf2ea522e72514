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
#ifndef HOSEQ_CONFIG_HPP
#define HOSEQ_CONFIG_HPP

// Experiment configuration: an INI file with the sections and keys listed in
// README.md. Every key is optional; unknown sections or keys are rejected.
// Also the deployment file format written by `hoseq generate`.

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hoseq/dataset.hpp"
#include "hoseq/errors.hpp"
#include "hoseq/geometry_radio.hpp"
#include "hoseq/mobility_sim.hpp"
#include "hoseq/seq2seq.hpp"
#include "hoseq/trace_io.hpp"

namespace hoseq {

struct SuiteConfig {
  std::string name = "cell_accuracy";
  // Empty lists fall back to the grid of the selected suite.
  std::vector<std::size_t> history_values;
  std::vector<std::size_t> horizon_values;
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::vector<double> drift_values{0.0, 0.1, 0.3};
  std::size_t convergence_episodes = 50;
  std::size_t checkpoint = 10;
};

struct ExperimentConfig {
  std::string scenario = "default";

  std::uint64_t deployment_seed = 1;
  AreaConfig area;
  std::size_t n_bs = 50;
  std::size_t n_sectors = 3;
  RadioConfig radio;

  std::size_t n_ues = 20;
  std::size_t n_steps = 20000;
  std::uint64_t mobility_seed = 1;
  MobilityConfig mobility;
  A3Config a3;

  BeamSynthConfig beams;
  std::uint64_t beam_seed = 1;

  TaskSpec task{.vocabulary = 0};  // vocabulary 0 means: number of cells, or beams for the beam task
  TrainConfig train{.episodes = 10};
  double train_fraction = 0.8;

  SuiteConfig suite;
  std::string output_dir = ".";

  TaskSpec resolved_task() const {
    TaskSpec t = task;
    if (t.vocabulary == 0) t.vocabulary = t.beams() ? beams.beams : n_bs;
    return t;
  }

  void validate() const {
    area.validate();
    radio.validate();
    mobility.validate();
    a3.validate();
    beams.validate();
    if (n_bs == 0) throw EmptyDeployment("n_bs must be at least 1");
    resolved_task().validate();
    train.validate();
    if (n_sectors == 0) throw InvalidConfig("n_sectors must be at least 1");
    if (n_ues == 0) throw InvalidConfig("n_ues must be at least 1");
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) throw InvalidConfig("train_fraction must lie in (0, 1)");
    if (suite.seeds.empty()) throw InvalidConfig("suite seeds must not be empty");
    if (suite.drift_values.empty()) throw InvalidConfig("suite drift_values must not be empty");
    if (suite.checkpoint < 1 || suite.checkpoint > suite.convergence_episodes) {
      throw InvalidConfig("suite checkpoint must lie in [1, convergence_episodes]");
    }
  }
};

namespace detail {

template <class T>
std::string format_value(const T& v) {
  if constexpr (std::is_same_v<T, std::string>) {
    return v;
  } else if constexpr (std::is_same_v<T, bool>) {
    return v ? "true" : "false";
  } else if constexpr (std::is_floating_point_v<T>) {
    return format_double(v);
  } else {
    return std::to_string(v);
  }
}

template <class T>
std::string format_value(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_value(v[i]);
  }
  return s;
}

template <class T>
void parse_value(std::string_view text, T& out, const std::string& key) {
  const std::string t = std::string(trim(text));
  if constexpr (std::is_same_v<T, std::string>) {
    out = t;
  } else if constexpr (std::is_same_v<T, bool>) {
    if (t == "true" || t == "1" || t == "yes") {
      out = true;
    } else if (t == "false" || t == "0" || t == "no") {
      out = false;
    } else {
      throw InvalidConfig(key + ": expected a boolean, got '" + t + "'");
    }
  } else {
    T v{};
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
      throw InvalidConfig(key + ": cannot parse '" + t + "'");
    }
    out = v;
  }
}

template <class T>
void parse_value(std::string_view text, std::vector<T>& out, const std::string& key) {
  out.clear();
  if (trim(text).empty()) return;
  for (const auto field : split_csv(text)) {
    T v{};
    parse_value(field, v, key);
    out.push_back(v);
  }
}

// A single table of (section, key) -> field drives parsing, validation of
// unknown keys and the canonical text used for hashing.
struct ConfigField {
  std::string section;
  std::string key;
  std::function<std::string()> get;
  std::function<void(std::string_view)> set;
};

template <class T>
ConfigField bind_field(std::string section, std::string key, T& ref) {
  const std::string full = section + "." + key;
  return {std::move(section), std::move(key), [&ref] { return format_value(ref); },
          [&ref, full](std::string_view v) { parse_value(v, ref, full); }};
}

inline ConfigField bind_task_kind(TaskKind& ref) {
  return {"task", "kind", [&ref] { return std::string(to_string(ref)); },
          [&ref](std::string_view v) { ref = parse_task_kind(trim(v)); }};
}

inline std::vector<ConfigField> config_fields(ExperimentConfig& c) {
  return {
      bind_field("scenario", "name", c.scenario),
      bind_field("deployment", "seed", c.deployment_seed),
      bind_field("deployment", "width", c.area.width),
      bind_field("deployment", "height", c.area.height),
      bind_field("deployment", "n_bs", c.n_bs),
      bind_field("deployment", "n_sectors", c.n_sectors),
      bind_field("deployment", "tx_power", c.radio.tx_power_dbm),
      bind_field("deployment", "path_loss_exponent", c.radio.path_loss_exponent),
      bind_field("deployment", "reference_distance", c.radio.reference_distance),
      bind_field("deployment", "max_gain", c.radio.max_gain_dbi),
      bind_field("deployment", "beamwidth_3db", c.radio.beamwidth_3db),
      bind_field("deployment", "front_back_ratio", c.radio.front_back_ratio),
      bind_field("mobility", "seed", c.mobility_seed),
      bind_field("mobility", "n_ues", c.n_ues),
      bind_field("mobility", "n_steps", c.n_steps),
      bind_field("mobility", "speed", c.mobility.speed),
      bind_field("mobility", "speed_spread", c.mobility.speed_spread),
      bind_field("mobility", "n_routes", c.mobility.n_routes),
      bind_field("mobility", "itinerary_legs", c.mobility.itinerary_legs),
      bind_field("mobility", "random_relocation_prob", c.mobility.random_relocation_prob),
      bind_field("mobility", "split_on_relocation", c.mobility.split_on_relocation),
      bind_field("mobility", "hysteresis", c.a3.hysteresis_db),
      bind_field("mobility", "time_to_trigger", c.a3.time_to_trigger),
      bind_field("beams", "seed", c.beam_seed),
      bind_field("beams", "n_ues", c.beams.n_ues),
      bind_field("beams", "n_steps", c.beams.n_steps),
      bind_field("beams", "beams", c.beams.beams),
      bind_field("beams", "drift", c.beams.drift),
      bind_field("beams", "noise", c.beams.noise),
      bind_field("beams", "stay_prob", c.beams.stay_prob),
      bind_field("beams", "reverse_prob", c.beams.reverse_prob),
      bind_field("beams", "corridor_seed", c.beams.corridor_seed),
      bind_task_kind(c.task.kind),
      bind_field("task", "history", c.task.history),
      bind_field("task", "horizon", c.task.horizon),
      bind_field("task", "vocabulary", c.task.vocabulary),
      bind_field("train", "episodes", c.train.episodes),
      bind_field("train", "batch_size", c.train.batch_size),
      bind_field("train", "lr", c.train.lr),
      bind_field("train", "seed", c.train.seed),
      bind_field("train", "init_scale", c.train.init_scale),
      bind_field("train", "hidden", c.train.hidden),
      bind_field("train", "clip_norm", c.train.clip_norm),
      bind_field("train", "train_fraction", c.train_fraction),
      bind_field("suite", "name", c.suite.name),
      bind_field("suite", "history_values", c.suite.history_values),
      bind_field("suite", "horizon_values", c.suite.horizon_values),
      bind_field("suite", "seeds", c.suite.seeds),
      bind_field("suite", "drift_values", c.suite.drift_values),
      bind_field("suite", "convergence_episodes", c.suite.convergence_episodes),
      bind_field("suite", "checkpoint", c.suite.checkpoint),
      bind_field("output", "dir", c.output_dir),
  };
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

// Applies `section.key = value` assignments on top of the current values.
inline void apply_setting(ExperimentConfig& config, std::string_view section, std::string_view key,
                          std::string_view value) {
  for (auto& f : detail::config_fields(config)) {
    if (f.section == section && f.key == key) {
      f.set(value);
      return;
    }
  }
  throw InvalidConfig("unknown config key '" + std::string(section) + "." + std::string(key) + "'");
}

inline ExperimentConfig parse_config(std::istream& in) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw InvalidConfig(std::string("malformed config: ") + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  ExperimentConfig config;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) throw InvalidConfig("config key '" + section + "' is outside any section");
    for (const auto& [key, value] : body) apply_setting(config, section, key, value.data());
  }
  return config;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  try {
    return parse_config(in);
  } catch (const Error& e) {
    throw InvalidConfig(path + ": " + e.what());
  }
}

// Every effective setting, one `section.key = value` per line in table order.
inline std::string canonical_text(const ExperimentConfig& config) {
  ExperimentConfig copy = config;
  std::string out;
  for (const auto& f : detail::config_fields(copy)) out += f.section + "." + f.key + " = " + f.get() + "\n";
  return out;
}

inline std::string config_hash(const ExperimentConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(detail::fnv1a(canonical_text(config))));
  return buf;
}

// Deployment files:
//
//   [deployment]
//   seed = 1
//   width = 1000
//   ...
//   [stations]
//   1 = x, y, orientation_1, orientation_2, ...
inline void write_deployment(std::ostream& out, const Deployment& d, const std::string& hash) {
  out << "; hoseq version=" << kVersion << " config_hash=" << hash << " seed=" << d.seed << '\n';
  out << "[deployment]\n";
  out << "seed = " << d.seed << '\n';
  out << "width = " << format_double(d.area.width) << '\n';
  out << "height = " << format_double(d.area.height) << '\n';
  out << "tx_power = " << format_double(d.radio.tx_power_dbm) << '\n';
  out << "path_loss_exponent = " << format_double(d.radio.path_loss_exponent) << '\n';
  out << "reference_distance = " << format_double(d.radio.reference_distance) << '\n';
  out << "max_gain = " << format_double(d.radio.max_gain_dbi) << '\n';
  out << "beamwidth_3db = " << format_double(d.radio.beamwidth_3db) << '\n';
  out << "front_back_ratio = " << format_double(d.radio.front_back_ratio) << '\n';
  out << "[stations]\n";
  for (const auto& bs : d.stations) {
    out << bs.id << " = " << format_double(bs.position.x) << ", " << format_double(bs.position.y);
    for (const double o : bs.sector_orientations) out << ", " << format_double(o);
    out << '\n';
  }
}

namespace detail {

template <class T>
T deployment_value(std::string_view text, const std::string& what) {
  text = trim(text);
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ParseError("deployment file: invalid " + what + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace detail

inline Deployment read_deployment(std::istream& in) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ParseError(std::string("malformed deployment file: ") + e.message() + " (line " +
                     std::to_string(e.line()) + ")");
  }
  Deployment d;
  const auto head = tree.get_child_optional("deployment");
  if (!head) throw ParseError("deployment file has no [deployment] section");
  auto number = [&](const std::string& key, double& out) {
    const auto v = head->get_optional<std::string>(key);
    if (!v) throw ParseError("deployment file is missing '" + key + "'");
    out = detail::deployment_value<double>(*v, key);
  };
  const auto seed = head->get_optional<std::string>("seed");
  if (!seed) throw ParseError("deployment file is missing 'seed'");
  d.seed = detail::deployment_value<std::uint64_t>(*seed, "seed");
  number("width", d.area.width);
  number("height", d.area.height);
  number("tx_power", d.radio.tx_power_dbm);
  number("path_loss_exponent", d.radio.path_loss_exponent);
  number("reference_distance", d.radio.reference_distance);
  number("max_gain", d.radio.max_gain_dbi);
  number("beamwidth_3db", d.radio.beamwidth_3db);
  number("front_back_ratio", d.radio.front_back_ratio);

  const auto stations = tree.get_child_optional("stations");
  if (!stations) throw ParseError("deployment file has no [stations] section");
  for (const auto& [key, value] : *stations) {
    BaseStation bs;
    bs.id = detail::deployment_value<int>(key, "station id");
    if (bs.id != static_cast<int>(d.stations.size()) + 1) throw ParseError("station ids must be 1, 2, ... in order");
    const auto fields = detail::split_csv(value.data());
    if (fields.size() < 3) throw ParseError("station " + key + " needs x, y and at least one orientation");
    bs.position = {detail::deployment_value<double>(fields[0], "x of station " + key),
                   detail::deployment_value<double>(fields[1], "y of station " + key)};
    for (std::size_t i = 2; i < fields.size(); ++i) {
      bs.sector_orientations.push_back(detail::deployment_value<double>(fields[i], "orientation of station " + key));
    }
    d.stations.push_back(std::move(bs));
  }
  d.validate();
  return d;
}

}  // namespace hoseq

#endif  // HOSEQ_CONFIG_HPP
