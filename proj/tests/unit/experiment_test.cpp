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
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "hoseq/experiment.hpp"

namespace hoseq {
namespace {

ExperimentConfig tiny(const std::string& suite) {
  ExperimentConfig c;
  c.n_bs = 12;
  c.n_ues = 3;
  c.n_steps = 1500;
  c.beams.n_ues = 3;
  c.beams.n_steps = 400;
  c.beams.beams = 12;
  c.train.episodes = 2;
  c.train.hidden = 8;
  c.suite.name = suite;
  c.suite.seeds = {1, 2};
  c.suite.convergence_episodes = 4;
  c.suite.checkpoint = 2;
  return c;
}

std::string metrics_text(const ExperimentReport& r) {
  std::ostringstream s;
  write_metrics_csv(s, r);
  return s.str();
}

TEST(Suites, UnknownNameIsUsageError) {
  EXPECT_THROW(run_experiment_suite(tiny("fig7")), UsageError);
}

class EverySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(EverySuite, RowsForEveryGridPointAndSeed) {
  const auto config = tiny(GetParam());
  const auto grid = resolve_grid(config);
  const auto report = run_experiment_suite(config);
  std::set<std::tuple<std::size_t, std::size_t, std::uint64_t>> seen;
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.suite, GetParam());
    EXPECT_TRUE(std::isfinite(row.value));
    seen.insert({row.history, row.horizon, row.seed});
  }
  EXPECT_EQ(seen.size(), grid.history.size() * grid.horizon.size() * config.suite.seeds.size());
  EXPECT_FALSE(report.loss_curves.empty());
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const auto& a = report.rows[i - 1];
    const auto& b = report.rows[i];
    EXPECT_LE(std::tie(a.history, a.horizon, a.seed), std::tie(b.history, b.horizon, b.seed));
  }
}

TEST_P(EverySuite, RerunIsByteIdentical) {
  const auto config = tiny(GetParam());
  EXPECT_EQ(metrics_text(run_experiment_suite(config)), metrics_text(run_experiment_suite(config)));
}

INSTANTIATE_TEST_SUITE_P(All, EverySuite, ::testing::ValuesIn(suite_names()));

TEST(Suites, DriftZeroMatchesInDistributionAccuracy) {
  auto drift = tiny("drift");
  drift.suite.history_values = {2};
  drift.suite.drift_values = {0.0, 0.3};
  auto beam = tiny("beam_accuracy");
  beam.suite.history_values = {2};
  const auto d = run_experiment_suite(drift);
  const auto b = run_experiment_suite(beam);
  for (const auto seed : drift.suite.seeds) {
    double at_zero = -1.0, in_dist = -2.0;
    for (const auto& r : d.rows) {
      if (r.seed == seed && r.k_step == 0 && r.metric == "accuracy@drift=0") at_zero = r.value;
    }
    for (const auto& r : b.rows) {
      if (r.seed == seed && r.k_step == 0 && r.metric == "accuracy") in_dist = r.value;
    }
    EXPECT_EQ(at_zero, in_dist);
  }
}

TEST(Suites, ConvergenceReportsCheckpointAndFinalLoss) {
  const auto r = run_experiment_suite(tiny("convergence"));
  std::set<std::string> metrics;
  for (const auto& row : r.rows) metrics.insert(row.metric);
  EXPECT_EQ(metrics, (std::set<std::string>{"loss@episode=2", "loss@episode=4", "relative_gap"}));
  for (const auto& c : r.loss_curves) EXPECT_EQ(c.train_loss.size(), 4u);
}

TEST(Suites, WritesProvenanceOnEveryCsv) {
  const auto dir = std::filesystem::temp_directory_path() / "hoseq_experiment_test";
  std::filesystem::remove_all(dir);
  const auto report = run_experiment_suite(tiny("dwell_mae"));
  const auto metrics = write_report(report, dir);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    ++files;
    std::ifstream in(entry.path());
    std::string first, second;
    std::getline(in, first);
    std::getline(in, second);
    EXPECT_EQ(first.rfind("# hoseq version=", 0), 0u) << entry.path();
    EXPECT_NE(first.find("config_hash=" + report.config_hash), std::string::npos);
    EXPECT_TRUE(second == kMetricsHeader || second == kLossHeader) << second;
  }
  EXPECT_EQ(files, 1 + report.loss_curves.size());
  EXPECT_TRUE(std::filesystem::exists(metrics));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace hoseq
