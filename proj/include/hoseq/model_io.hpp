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
#ifndef HOSEQ_MODEL_IO_HPP
#define HOSEQ_MODEL_IO_HPP

// Binary model container, all integers and doubles little-endian:
//
//   magic "HOSEQMDL" | u32 version | u32 task kind | u64 N, K, L, H
//   | u8 has_dwell_scale | f64 scale min | f64 scale max
//   | blocks: u64 rows, u64 cols, rows*cols f64 row-major
//
// Blocks follow RnnWeights::blocks() order: W_in, W_rec, b, U_1..U_K,
// c_1..c_K. Doubles are stored as raw bit patterns, so a round trip is exact.

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "hoseq/errors.hpp"
#include "hoseq/seq2seq.hpp"

namespace hoseq {

inline constexpr std::array<char, 8> kModelMagic{'H', 'O', 'S', 'E', 'Q', 'M', 'D', 'L'};
inline constexpr std::uint32_t kModelFormatVersion = 1;

namespace detail {

inline void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFFu);
  out.write(b, 8);
}

inline void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFFu);
  out.write(b, 4);
}

inline void put_f64(std::ostream& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

inline void read_exact(std::istream& in, char* dst, std::size_t n) {
  if (!in.read(dst, static_cast<std::streamsize>(n))) throw FormatError("model file is truncated");
}

inline std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  read_exact(in, reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

inline std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  read_exact(in, reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

inline double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

}  // namespace detail

inline void save_model(std::ostream& out, const RnnModel& model) {
  out.write(kModelMagic.data(), kModelMagic.size());
  detail::put_u32(out, kModelFormatVersion);
  detail::put_u32(out, static_cast<std::uint32_t>(model.task.kind));
  detail::put_u64(out, model.task.history);
  detail::put_u64(out, model.task.horizon);
  detail::put_u64(out, model.task.vocabulary);
  detail::put_u64(out, model.hidden);
  out.put(model.dwell_scale ? 1 : 0);
  detail::put_f64(out, model.dwell_scale ? model.dwell_scale->min : 0.0);
  detail::put_f64(out, model.dwell_scale ? model.dwell_scale->max : 0.0);
  for (const auto* block : model.weights.blocks()) {
    detail::put_u64(out, static_cast<std::uint64_t>(block->rows()));
    detail::put_u64(out, static_cast<std::uint64_t>(block->cols()));
    for (Eigen::Index r = 0; r < block->rows(); ++r) {
      for (Eigen::Index c = 0; c < block->cols(); ++c) detail::put_f64(out, (*block)(r, c));
    }
  }
  if (!out) throw FormatError("failed to write model");
}

inline RnnModel load_model(std::istream& in) {
  std::array<char, 8> magic{};
  detail::read_exact(in, magic.data(), magic.size());
  if (magic != kModelMagic) throw FormatError("not a hoseq model file (bad magic)");
  const auto version = detail::get_u32(in);
  if (version != kModelFormatVersion) {
    throw FormatError("unsupported model format version " + std::to_string(version));
  }
  const auto kind = detail::get_u32(in);
  if (kind > static_cast<std::uint32_t>(TaskKind::BeamToBeam)) throw FormatError("unknown task kind in model file");

  TaskSpec task;
  task.kind = static_cast<TaskKind>(kind);
  task.history = detail::get_u64(in);
  task.horizon = detail::get_u64(in);
  task.vocabulary = detail::get_u64(in);
  const auto hidden = detail::get_u64(in);
  try {
    task.validate();
  } catch (const Error& e) {
    throw FormatError(std::string("invalid task in model file: ") + e.what());
  }
  if (hidden < 1 || task.horizon > 4096 || task.vocabulary > (1u << 24) || hidden > (1u << 16)) {
    throw FormatError("implausible model dimensions");
  }

  char has_scale = 0;
  detail::read_exact(in, &has_scale, 1);
  const double lo = detail::get_f64(in);
  const double hi = detail::get_f64(in);

  // Zero-initialized skeleton provides the expected block shapes.
  RnnModel model = init_model(task, hidden, 0, 0.0);
  if (has_scale) model.dwell_scale = DwellScale{lo, hi};
  for (auto* block : model.weights.blocks()) {
    const auto rows = detail::get_u64(in);
    const auto cols = detail::get_u64(in);
    if (rows != static_cast<std::uint64_t>(block->rows()) || cols != static_cast<std::uint64_t>(block->cols())) {
      throw FormatError("weight block shape does not match the stored dimensions");
    }
    for (Eigen::Index r = 0; r < block->rows(); ++r) {
      for (Eigen::Index c = 0; c < block->cols(); ++c) (*block)(r, c) = detail::get_f64(in);
    }
  }
  if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing bytes after model data");
  return model;
}

}  // namespace hoseq

#endif  // HOSEQ_MODEL_IO_HPP
