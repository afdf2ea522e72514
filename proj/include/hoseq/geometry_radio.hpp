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
#ifndef HOSEQ_GEOMETRY_RADIO_HPP
#define HOSEQ_GEOMETRY_RADIO_HPP

// Base-station deployments and the deterministic LOS link budget:
// tx power + sector antenna gain - log-distance path loss.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "hoseq/errors.hpp"
#include "hoseq/rng.hpp"

namespace hoseq {

using CellId = int;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) { return std::hypot(b.x - a.x, b.y - a.y); }

// Wraps any finite angle into [0, 360).
inline double wrap_degrees(double deg) {
  double w = std::fmod(deg, 360.0);
  if (w < 0.0) w += 360.0;
  return w >= 360.0 ? 0.0 : w;
}

// Azimuth of `to` seen from `from`, counter-clockwise from +x, in [0, 360).
inline double azimuth_deg(Point from, Point to) {
  return wrap_degrees(std::atan2(to.y - from.y, to.x - from.x) * 180.0 / std::numbers::pi);
}

// Smallest absolute difference between two directions, in [0, 180].
inline double angular_separation(double a_deg, double b_deg) {
  const double d = wrap_degrees(a_deg - b_deg);
  return d > 180.0 ? 360.0 - d : d;
}

struct AreaConfig {
  double width = 1000.0;   // m
  double height = 1000.0;  // m

  void validate() const {
    if (!(width > 0.0) || !(height > 0.0)) {
      throw InvalidArea("area must have positive width and height, got " + std::to_string(width) +
                        " x " + std::to_string(height));
    }
  }

  bool contains(Point p) const { return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height; }

  friend bool operator==(const AreaConfig&, const AreaConfig&) = default;
};

struct RadioConfig {
  double tx_power_dbm = 43.0;       // per sector
  double path_loss_exponent = 3.1;
  double reference_distance = 1.0;  // m
  double max_gain_dbi = 14.0;
  double beamwidth_3db = 65.0;      // deg
  double front_back_ratio = 30.0;   // dB

  void validate() const {
    if (!(path_loss_exponent > 0.0)) throw InvalidConfig("path_loss_exponent must be > 0");
    if (!(reference_distance > 0.0)) throw InvalidConfig("reference_distance must be > 0");
    if (!(beamwidth_3db > 0.0 && beamwidth_3db <= 180.0))
      throw InvalidConfig("beamwidth_3db must lie in (0, 180]");
    if (!(front_back_ratio > 0.0)) throw InvalidConfig("front_back_ratio must be > 0");
  }

  friend bool operator==(const RadioConfig&, const RadioConfig&) = default;
};

struct BaseStation {
  CellId id = 0;
  Point position;
  std::vector<double> sector_orientations;  // boresight azimuths, deg

  friend bool operator==(const BaseStation&, const BaseStation&) = default;
};

struct Deployment {
  AreaConfig area;
  RadioConfig radio;
  std::vector<BaseStation> stations;  // stations[i].id == i + 1
  std::uint64_t seed = 0;

  std::size_t size() const { return stations.size(); }

  const BaseStation& station(CellId id) const { return stations.at(static_cast<std::size_t>(id - 1)); }

  // Checks the structural invariants; used after loading from a file.
  void validate() const {
    area.validate();
    radio.validate();
    if (stations.empty()) throw EmptyDeployment("deployment has no base stations");
    for (std::size_t i = 0; i < stations.size(); ++i) {
      const auto& bs = stations[i];
      if (bs.id != static_cast<CellId>(i + 1))
        throw InvalidConfig("station ids must be exactly 1..L in order");
      if (!area.contains(bs.position))
        throw InvalidConfig("station " + std::to_string(bs.id) + " lies outside the area");
      if (bs.sector_orientations.empty())
        throw InvalidConfig("station " + std::to_string(bs.id) + " has no sectors");
      for (std::size_t a = 0; a < bs.sector_orientations.size(); ++a) {
        const double o = bs.sector_orientations[a];
        if (!(o >= 0.0 && o < 360.0))
          throw InvalidConfig("sector orientation out of [0, 360) at station " + std::to_string(bs.id));
        for (std::size_t b = 0; b < a; ++b) {
          if (bs.sector_orientations[b] == o)
            throw InvalidConfig("duplicate sector orientation at station " + std::to_string(bs.id));
        }
      }
    }
  }

  friend bool operator==(const Deployment&, const Deployment&) = default;
};

inline Deployment generate_deployment(std::uint64_t seed, const AreaConfig& area, std::size_t n_bs,
                                      const RadioConfig& radio, std::size_t n_sectors) {
  if (n_bs == 0) throw EmptyDeployment("n_bs must be at least 1");
  area.validate();
  radio.validate();
  if (n_sectors == 0) throw InvalidConfig("n_sectors must be at least 1");

  std::vector<double> orientations(n_sectors);
  for (std::size_t s = 0; s < n_sectors; ++s) {
    orientations[s] = 360.0 * static_cast<double>(s) / static_cast<double>(n_sectors);
  }

  Deployment d{area, radio, {}, seed};
  d.stations.reserve(n_bs);
  Rng rng(seed);
  for (std::size_t i = 0; i < n_bs; ++i) {
    const double x = rng.uniform(0.0, area.width);
    const double y = rng.uniform(0.0, area.height);
    d.stations.push_back({static_cast<CellId>(i + 1), {x, y}, orientations});
  }
  return d;
}

// Log-distance LOS path loss relative to the reference distance, in dB.
inline double path_loss(double distance_m, const RadioConfig& radio) {
  const double d = std::max(distance_m, radio.reference_distance);
  return 10.0 * radio.path_loss_exponent * std::log10(d / radio.reference_distance);
}

// Parabolic horizontal sector pattern, attenuation capped at the front-back ratio.
inline double sector_gain(double boresight_deg, double ue_azimuth_deg, const RadioConfig& radio) {
  const double theta = angular_separation(boresight_deg, ue_azimuth_deg);
  const double ratio = theta / radio.beamwidth_3db;
  return radio.max_gain_dbi - std::min(12.0 * ratio * ratio, radio.front_back_ratio);
}

inline double rsrp(const BaseStation& bs, std::size_t sector_index, Point ue, const RadioConfig& radio) {
  const double boresight = bs.sector_orientations.at(sector_index);
  // A UE on top of the site sees azimuth 0; the path-loss clamp keeps it finite.
  const double az = azimuth_deg(bs.position, ue);
  return radio.tx_power_dbm + sector_gain(boresight, az, radio) - path_loss(distance(bs.position, ue), radio);
}

// Strongest sector of one station.
inline double cell_rsrp(const BaseStation& bs, Point ue, const RadioConfig& radio) {
  const double az = azimuth_deg(bs.position, ue);
  const double loss = path_loss(distance(bs.position, ue), radio);
  double best_gain = -INFINITY;
  for (double boresight : bs.sector_orientations) {
    best_gain = std::max(best_gain, sector_gain(boresight, az, radio));
  }
  return radio.tx_power_dbm + best_gain - loss;
}

struct CellPower {
  CellId cell = 0;
  double rsrp_dbm = -INFINITY;
};

// Ties resolve to the lowest cell id (strict comparison while scanning in id
// order); within a station the sector order is irrelevant to the returned id.
inline CellPower best_cell(const Deployment& deployment, Point ue) {
  if (deployment.stations.empty()) throw EmptyDeployment("deployment has no base stations");
  CellPower best;
  for (const auto& bs : deployment.stations) {
    const double p = cell_rsrp(bs, ue, deployment.radio);
    if (p > best.rsrp_dbm) best = {bs.id, p};
  }
  return best;
}

}  // namespace hoseq

#endif  // HOSEQ_GEOMETRY_RADIO_HPP
