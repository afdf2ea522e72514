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
#ifndef HOSEQ_TRACE_IO_HPP
#define HOSEQ_TRACE_IO_HPP

// CSV formats for mobility-history traces.
//
//   cell traces  ue_id,seq_index,cell_id,dwell_steps
//   beam traces  ue_id,seq_index,beam_id
//   beam logs    timestamp,ue_id,beam_id      (raw per-report samples)
//
// seq_index restarts at 0 whenever a new trace begins, so several segments of
// one UE can share a ue_id. Lines starting with '#' carry provenance and are
// skipped by the readers.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hoseq/dataset.hpp"
#include "hoseq/errors.hpp"
#include "hoseq/mobility_sim.hpp"

namespace hoseq {

inline constexpr std::string_view kCellTraceHeader = "ue_id,seq_index,cell_id,dwell_steps";
inline constexpr std::string_view kBeamTraceHeader = "ue_id,seq_index,beam_id";
inline constexpr std::string_view kBeamLogHeader = "timestamp,ue_id,beam_id";

#ifndef HOSEQ_VERSION
#define HOSEQ_VERSION "0.1.0"
#endif

inline constexpr std::string_view kVersion = HOSEQ_VERSION;

// Shortest representation that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct Provenance {
  std::string config_hash;
  std::string seed;  // one seed, or a comma-separated list for multi-seed reports
};

inline void write_provenance(std::ostream& out, const Provenance& p) {
  out << "# hoseq version=" << kVersion << " config_hash=" << p.config_hash << " seed=" << p.seed << '\n';
}

namespace detail {

inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no, std::string_view what) {
  field = trim(field);
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": invalid " + std::string(what) + " '" +
                     std::string(field) + "'");
  }
  return value;
}

// Next non-comment, non-blank line; false at end of input.
inline bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    return true;
  }
  return false;
}

}  // namespace detail

enum class TraceKind { Cell, Beam };

struct TraceFile {
  TraceKind kind = TraceKind::Cell;
  std::vector<MobilityTrace> traces;
};

inline void write_cell_traces(std::ostream& out, std::span<const MobilityTrace> traces,
                              const std::optional<Provenance>& provenance = std::nullopt) {
  if (provenance) write_provenance(out, *provenance);
  out << kCellTraceHeader << '\n';
  for (const auto& t : traces) {
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
      out << t.ue_id << ',' << i << ',' << t.entries[i].id << ',' << t.entries[i].dwell << '\n';
    }
  }
}

inline void write_beam_traces(std::ostream& out, std::span<const MobilityTrace> traces,
                              const std::optional<Provenance>& provenance = std::nullopt) {
  if (provenance) write_provenance(out, *provenance);
  out << kBeamTraceHeader << '\n';
  for (const auto& t : traces) {
    for (std::size_t i = 0; i < t.entries.size(); ++i) out << t.ue_id << ',' << i << ',' << t.entries[i].id << '\n';
  }
}

// Expands every entry into `dwell` one-second reports.
inline void write_beam_log(std::ostream& out, std::span<const MobilityTrace> traces,
                           const std::optional<Provenance>& provenance = std::nullopt) {
  if (provenance) write_provenance(out, *provenance);
  out << kBeamLogHeader << '\n';
  for (const auto& t : traces) {
    std::size_t ts = 0;
    for (const auto& e : t.entries) {
      for (std::size_t r = 0; r < e.dwell; ++r) out << ts++ << ',' << t.ue_id << ',' << e.id << '\n';
    }
  }
}

// Raw beam log -> one collapsed trace per ue_id, in order of first appearance.
// Samples are ordered by timestamp (stable for equal stamps); runs of the same
// beam merge into one entry whose dwell is the run length.
inline std::vector<MobilityTrace> ingest_beam_trace(std::istream& in, std::size_t beams) {
  std::string line;
  std::size_t line_no = 0;
  if (!detail::next_data_line(in, line, line_no)) return {};
  if (detail::trim(line) != kBeamLogHeader) {
    throw ParseError("line " + std::to_string(line_no) + ": expected header '" + std::string(kBeamLogHeader) + "'");
  }

  struct Sample {
    double timestamp;
    int beam;
  };
  std::vector<std::string> order;
  std::map<std::string, std::vector<Sample>, std::less<>> samples;
  while (detail::next_data_line(in, line, line_no)) {
    const auto fields = detail::split_csv(detail::trim(line));
    if (fields.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 3 fields, got " + std::to_string(fields.size()));
    }
    const auto ts = detail::parse_number<double>(fields[0], line_no, "timestamp");
    const std::string ue(detail::trim(fields[1]));
    if (ue.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty ue_id");
    const auto beam = detail::parse_number<int>(fields[2], line_no, "beam_id");
    if (beam < 1 || static_cast<std::size_t>(beam) > beams) {
      throw ParseError("line " + std::to_string(line_no) + ": beam_id " + std::to_string(beam) + " outside 1.." +
                       std::to_string(beams));
    }
    auto [it, inserted] = samples.try_emplace(ue);
    if (inserted) order.push_back(ue);
    it->second.push_back({ts, beam});
  }

  std::vector<MobilityTrace> traces;
  for (const auto& ue : order) {
    auto& s = samples.find(ue)->second;
    std::stable_sort(s.begin(), s.end(), [](const Sample& a, const Sample& b) { return a.timestamp < b.timestamp; });
    MobilityTrace t{ue, {}};
    for (const auto& x : s) {
      if (!t.entries.empty() && t.entries.back().id == x.beam) {
        ++t.entries.back().dwell;
      } else {
        t.entries.push_back({x.beam, 1});
      }
    }
    traces.push_back(std::move(t));
  }
  return traces;
}

// Reads any of the three formats, detected from the header line. `beams`
// bounds beam ids when a raw beam log is ingested.
inline TraceFile read_traces(std::istream& in, std::size_t beams) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream body(text);
  std::string line;
  std::size_t line_no = 0;
  if (!detail::next_data_line(body, line, line_no)) return {TraceKind::Cell, {}};
  const std::string header(detail::trim(line));
  if (header == kBeamLogHeader) {
    std::istringstream log(text);
    return {TraceKind::Beam, ingest_beam_trace(log, beams)};
  }

  TraceFile file;
  std::size_t expected_fields = 0;
  if (header == kCellTraceHeader) {
    file.kind = TraceKind::Cell;
    expected_fields = 4;
  } else if (header == kBeamTraceHeader) {
    file.kind = TraceKind::Beam;
    expected_fields = 3;
  } else {
    throw ParseError("line " + std::to_string(line_no) + ": unrecognised header '" + header + "'");
  }

  while (detail::next_data_line(body, line, line_no)) {
    const auto fields = detail::split_csv(detail::trim(line));
    if (fields.size() != expected_fields) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(expected_fields) +
                       " fields, got " + std::to_string(fields.size()));
    }
    const std::string ue(detail::trim(fields[0]));
    if (ue.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty ue_id");
    const auto seq = detail::parse_number<std::size_t>(fields[1], line_no, "seq_index");
    const auto id = detail::parse_number<int>(fields[2], line_no, "id");
    const std::size_t dwell =
        expected_fields == 4 ? detail::parse_number<std::size_t>(fields[3], line_no, "dwell_steps") : 1;
    if (dwell == 0) throw ParseError("line " + std::to_string(line_no) + ": dwell_steps must be >= 1");

    const bool fresh = file.traces.empty() || file.traces.back().ue_id != ue || seq == 0;
    if (fresh) {
      if (seq != 0) throw ParseError("line " + std::to_string(line_no) + ": trace must start at seq_index 0");
      file.traces.push_back({ue, {}});
    } else if (seq != file.traces.back().entries.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": seq_index out of order");
    }
    file.traces.back().entries.push_back({id, dwell});
  }
  return file;
}

// Dataset description in the same sectioned key = value form as the config.
inline void write_dataset_metadata(std::ostream& out, const TaskSpec& task, std::size_t train_windows,
                                   std::size_t validation_windows, const std::optional<DwellScale>& scale,
                                   const Provenance& p) {
  out << "; hoseq version=" << kVersion << " config_hash=" << p.config_hash << " seed=" << p.seed << '\n';
  out << "[dataset]\n";
  out << "kind = " << to_string(task.kind) << '\n';
  out << "history = " << task.history << '\n';
  out << "horizon = " << task.horizon << '\n';
  out << "vocabulary = " << task.vocabulary << '\n';
  if (scale) {
    out << "dwell_min = " << format_double(scale->min) << '\n';
    out << "dwell_max = " << format_double(scale->max) << '\n';
  }
  out << "train_windows = " << train_windows << '\n';
  out << "validation_windows = " << validation_windows << '\n';
}

}  // namespace hoseq

#endif  // HOSEQ_TRACE_IO_HPP
