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

#include <sstream>
#include <string>
#include <vector>

#include "hoseq/config.hpp"
#include "hoseq/model_io.hpp"
#include "hoseq/seq2seq.hpp"
#include "hoseq/trace_io.hpp"

namespace hoseq {
namespace {

std::vector<MobilityTrace> sample_traces() {
  return {{"1", {{4, 3}, {7, 12}, {2, 1}}}, {"1", {{9, 5}}}, {"ue-b", {{1, 2}, {3, 8}}}};
}

TEST(TraceCsv, CellRoundTrip) {
  const auto traces = sample_traces();
  std::stringstream s;
  write_cell_traces(s, traces, Provenance{"abc", "3"});
  const std::string text = s.str();
  EXPECT_EQ(text.rfind("# hoseq version=", 0), 0u);
  EXPECT_NE(text.find("\nue_id,seq_index,cell_id,dwell_steps\n1,0,4,3\n"), std::string::npos);
  const auto back = read_traces(s, 68);
  EXPECT_EQ(back.kind, TraceKind::Cell);
  EXPECT_EQ(back.traces, traces);
}

TEST(TraceCsv, BeamRoundTripCollapsesDwell) {
  const std::vector<MobilityTrace> traces{{"7", {{5, 1}, {9, 1}, {5, 1}}}};
  std::stringstream s;
  write_beam_traces(s, traces);
  const auto back = read_traces(s, 68);
  EXPECT_EQ(back.kind, TraceKind::Beam);
  EXPECT_EQ(back.traces, traces);
}

TEST(TraceCsv, ParseErrorsCarryLineNumbers) {
  std::stringstream bad_field("ue_id,seq_index,cell_id,dwell_steps\n1,0,4,3\n1,1,x,2\n");
  try {
    read_traces(bad_field, 68);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::stringstream gap("ue_id,seq_index,cell_id,dwell_steps\n1,0,4,3\n1,2,5,2\n");
  EXPECT_THROW(read_traces(gap, 68), ParseError);
  std::stringstream zero("ue_id,seq_index,cell_id,dwell_steps\n1,0,4,0\n");
  EXPECT_THROW(read_traces(zero, 68), ParseError);
  std::stringstream header("a,b,c\n");
  EXPECT_THROW(read_traces(header, 68), ParseError);
}

TEST(TraceCsv, EmptyInputGivesNoTraces) {
  std::stringstream empty;
  EXPECT_TRUE(read_traces(empty, 68).traces.empty());
  std::stringstream header_only("ue_id,seq_index,cell_id,dwell_steps\n");
  EXPECT_TRUE(read_traces(header_only, 68).traces.empty());
}

TEST(BeamLog, CollapsesDuplicates) {
  std::stringstream s("timestamp,ue_id,beam_id\n1,1,5\n2,1,5\n3,1,9\n");
  const auto traces = ingest_beam_trace(s, 68);
  ASSERT_EQ(traces.size(), 1u);
  EXPECT_EQ(traces[0].entries, (std::vector<TraceEntry>{{5, 2}, {9, 1}}));
}

TEST(BeamLog, SortsByTimePerUe) {
  std::stringstream s("timestamp,ue_id,beam_id\n3,a,9\n1,b,2\n1,a,5\n2,a,5\n");
  const auto traces = ingest_beam_trace(s, 68);
  ASSERT_EQ(traces.size(), 2u);
  EXPECT_EQ(traces[0].ue_id, "a");
  EXPECT_EQ(traces[0].entries, (std::vector<TraceEntry>{{5, 2}, {9, 1}}));
  EXPECT_EQ(traces[1].entries, (std::vector<TraceEntry>{{2, 1}}));
}

TEST(BeamLog, EmptyAndErrors) {
  std::stringstream empty;
  EXPECT_TRUE(ingest_beam_trace(empty, 68).empty());
  std::stringstream out_of_range("timestamp,ue_id,beam_id\n1,1,69\n");
  try {
    ingest_beam_trace(out_of_range, 68);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  std::stringstream short_row("timestamp,ue_id,beam_id\n1,1\n");
  EXPECT_THROW(ingest_beam_trace(short_row, 68), ParseError);
}

TEST(BeamLog, ExportThenIngestIsIdentity) {
  const std::vector<MobilityTrace> traces{{"1", {{3, 2}, {8, 1}, {3, 4}}}, {"2", {{68, 1}, {1, 3}}}};
  std::stringstream s;
  write_beam_log(s, traces, Provenance{"h", "1"});
  EXPECT_EQ(read_traces(s, 68).traces, traces);
}

RnnModel sample_model(TaskKind kind) {
  auto m = init_model({kind, 4, 2, 7}, 9, 5, 0.3);
  for (auto& b : m.weights.head_biases) b.setRandom();
  m.weights.bias.setRandom();
  if (kind != TaskKind::CellToCell) m.dwell_scale = DwellScale{1.0, 37.5};
  return m;
}

TEST(ModelFile, BitExactRoundTrip) {
  for (auto kind : {TaskKind::CellToCell, TaskKind::CellDwellToDwell, TaskKind::CellDwellToCell}) {
    const auto m = sample_model(kind);
    std::stringstream s;
    save_model(s, m);
    const std::string bytes = s.str();
    EXPECT_EQ(bytes.substr(0, 8), "HOSEQMDL");
    const auto back = load_model(s);
    EXPECT_EQ(back.task, m.task);
    EXPECT_EQ(back.hidden, m.hidden);
    EXPECT_EQ(back.dwell_scale, m.dwell_scale);
    const auto a = m.weights.blocks();
    const auto b = back.weights.blocks();
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(*a[i], *b[i]);
    std::stringstream again;
    save_model(again, back);
    EXPECT_EQ(again.str(), bytes);
  }
}

TEST(ModelFile, RejectsCorruptInput) {
  std::stringstream s;
  save_model(s, sample_model(TaskKind::CellToCell));
  const std::string bytes = s.str();

  std::stringstream magic("NOTAMODEL" + bytes.substr(9));
  EXPECT_THROW(load_model(magic), FormatError);
  std::stringstream truncated(bytes.substr(0, bytes.size() - 3));
  EXPECT_THROW(load_model(truncated), FormatError);
  std::stringstream trailing(bytes + "x");
  EXPECT_THROW(load_model(trailing), FormatError);
  std::string bad_version = bytes;
  bad_version[8] = 9;
  std::stringstream version(bad_version);
  EXPECT_THROW(load_model(version), FormatError);
  std::stringstream empty;
  EXPECT_THROW(load_model(empty), FormatError);
}

TEST(DeploymentFile, RoundTripIsExact) {
  const auto d = generate_deployment(7, AreaConfig{}, 50, RadioConfig{}, 3);
  std::stringstream s;
  write_deployment(s, d, "hash");
  const auto back = read_deployment(s);
  EXPECT_EQ(back, d);
}

TEST(DeploymentFile, Errors) {
  std::stringstream missing("[deployment]\nseed = 1\n");
  EXPECT_THROW(read_deployment(missing), ParseError);
  const auto d = generate_deployment(7, AreaConfig{}, 3, RadioConfig{}, 3);
  std::stringstream s;
  write_deployment(s, d, "hash");
  std::string text = s.str();
  text.replace(text.find("\n2 = "), 5, "\n5 = ");
  std::stringstream renumbered(text);
  EXPECT_THROW(read_deployment(renumbered), ParseError);
}

}  // namespace
}  // namespace hoseq
