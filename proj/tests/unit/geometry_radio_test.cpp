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

#include <algorithm>
#include <cmath>
#include <vector>

#include "hoseq/geometry_radio.hpp"
#include "hoseq/rng.hpp"

namespace hoseq {
namespace {

const RadioConfig kRadio{};

BaseStation station(CellId id, Point p, std::vector<double> sectors = {0.0, 120.0, 240.0}) {
  return {id, p, std::move(sectors)};
}

Deployment deployment_of(std::vector<BaseStation> stations, RadioConfig radio = {}) {
  return {AreaConfig{}, radio, std::move(stations), 0};
}

TEST(Deployment, FiftyStationsWithThreeSectors) {
  const auto d = generate_deployment(7, AreaConfig{}, 50, kRadio, 3);
  ASSERT_EQ(d.size(), 50u);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& bs = d.stations[i];
    EXPECT_EQ(bs.id, static_cast<CellId>(i + 1));
    EXPECT_EQ(bs.sector_orientations, (std::vector<double>{0.0, 120.0, 240.0}));
    EXPECT_TRUE(d.area.contains(bs.position));
  }
  EXPECT_NO_THROW(d.validate());
}

TEST(Deployment, SameSeedIsBitIdentical) {
  EXPECT_EQ(generate_deployment(7, AreaConfig{}, 50, kRadio, 3), generate_deployment(7, AreaConfig{}, 50, kRadio, 3));
}

TEST(Deployment, DifferentSeedsMovePositions) {
  const auto a = generate_deployment(7, AreaConfig{}, 50, kRadio, 3);
  const auto b = generate_deployment(8, AreaConfig{}, 50, kRadio, 3);
  EXPECT_NE(a.stations.front().position, b.stations.front().position);
}

TEST(Deployment, FourSectorsAreEvenlySpaced) {
  const auto d = generate_deployment(1, AreaConfig{}, 2, kRadio, 4);
  EXPECT_EQ(d.stations[0].sector_orientations, (std::vector<double>{0.0, 90.0, 180.0, 270.0}));
}

TEST(Deployment, Errors) {
  EXPECT_THROW(generate_deployment(1, AreaConfig{}, 0, kRadio, 3), EmptyDeployment);
  EXPECT_THROW(generate_deployment(1, AreaConfig{0.0, 10.0}, 5, kRadio, 3), InvalidArea);
  EXPECT_THROW(generate_deployment(1, AreaConfig{10.0, -1.0}, 5, kRadio, 3), InvalidArea);
}

TEST(PathLoss, HandValues) {
  EXPECT_DOUBLE_EQ(path_loss(1.0, kRadio), 0.0);
  EXPECT_NEAR(path_loss(100.0, kRadio), 62.0, 1e-12);
  EXPECT_NEAR(path_loss(10.0, kRadio), 31.0, 1e-12);
}

TEST(PathLoss, ClampsBelowReferenceDistance) {
  EXPECT_DOUBLE_EQ(path_loss(0.0, kRadio), 0.0);
  EXPECT_DOUBLE_EQ(path_loss(0.5, kRadio), 0.0);
}

TEST(PathLoss, NonDecreasingInDistance) {
  double prev = path_loss(0.0, kRadio);
  for (double d = 0.25; d < 2000.0; d *= 1.3) {
    const double pl = path_loss(d, kRadio);
    EXPECT_GE(pl, prev);
    prev = pl;
  }
}

TEST(SectorGain, HandValues) {
  EXPECT_DOUBLE_EQ(sector_gain(0.0, 0.0, kRadio), 14.0);
  EXPECT_NEAR(sector_gain(0.0, 65.0, kRadio), 2.0, 1e-12);
  EXPECT_NEAR(sector_gain(0.0, 180.0, kRadio), -16.0, 1e-12);
}

TEST(SectorGain, WrapsAroundNorth) {
  EXPECT_NEAR(sector_gain(350.0, 10.0, kRadio), sector_gain(0.0, 20.0, kRadio), 1e-12);
  EXPECT_NEAR(sector_gain(0.0, -65.0, kRadio), 2.0, 1e-12);
}

TEST(SectorGain, PeaksAtBoresightAndNeverIncreases) {
  double prev = sector_gain(0.0, 0.0, kRadio);
  for (double theta = 0.5; theta <= 180.0; theta += 0.5) {
    const double g = sector_gain(0.0, theta, kRadio);
    EXPECT_LE(g, prev);
    EXPECT_LT(g, kRadio.max_gain_dbi);
    EXPECT_GE(g, kRadio.max_gain_dbi - kRadio.front_back_ratio);
    prev = g;
  }
}

TEST(Rsrp, HandValues) {
  const auto bs = station(1, {500.0, 500.0});
  EXPECT_NEAR(rsrp(bs, 0, {600.0, 500.0}, kRadio), -5.0, 1e-9);
  EXPECT_NEAR(rsrp(bs, 0, {501.0, 500.0}, kRadio), 57.0, 1e-9);
  EXPECT_NEAR(rsrp(bs, 1, {500.0 + 100.0 * std::cos(2.0 * std::numbers::pi / 3.0),
                           500.0 + 100.0 * std::sin(2.0 * std::numbers::pi / 3.0)},
                   kRadio),
              -5.0, 1e-9);
}

TEST(Rsrp, ColocatedUeStaysFinite) {
  const auto bs = station(1, {500.0, 500.0});
  EXPECT_TRUE(std::isfinite(rsrp(bs, 0, {500.0, 500.0}, kRadio)));
}

TEST(Rsrp, SymmetricSectorsGiveEqualPower) {
  const auto bs = station(1, {500.0, 500.0}, {30.0, 330.0});
  const Point ue{700.0, 500.0};
  EXPECT_NEAR(rsrp(bs, 0, ue, kRadio), rsrp(bs, 1, ue, kRadio), 1e-12);
}

TEST(Rsrp, StrictlyDecreasingAlongBoresight) {
  const auto bs = station(1, {0.0, 0.0});
  double prev = rsrp(bs, 0, {1.0, 0.0}, kRadio);
  for (double d = 1.5; d < 1500.0; d *= 1.2) {
    const double p = rsrp(bs, 0, {d, 0.0}, kRadio);
    EXPECT_LT(p, prev);
    prev = p;
  }
}

// Brute force over every (station, sector) with the formulas written out.
CellId brute_force_best(const Deployment& d, Point ue) {
  CellId best = 0;
  double best_p = -INFINITY;
  for (const auto& bs : d.stations) {
    const double dist = std::max(std::hypot(ue.x - bs.position.x, ue.y - bs.position.y), 1.0);
    const double az = std::atan2(ue.y - bs.position.y, ue.x - bs.position.x) * 180.0 / std::numbers::pi;
    for (double boresight : bs.sector_orientations) {
      double theta = std::fabs(std::fmod(az - boresight + 720.0, 360.0));
      if (theta > 180.0) theta = 360.0 - theta;
      const double gain = 14.0 - std::min(12.0 * (theta / 65.0) * (theta / 65.0), 30.0);
      const double p = 43.0 + gain - 31.0 * std::log10(dist);
      if (p > best_p) {
        best_p = p;
        best = bs.id;
      }
    }
  }
  return best;
}

TEST(BestCell, MatchesBruteForce) {
  const auto d = generate_deployment(11, AreaConfig{}, 50, kRadio, 3);
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const Point ue{rng.uniform(0.0, 1000.0), rng.uniform(0.0, 1000.0)};
    EXPECT_EQ(best_cell(d, ue).cell, brute_force_best(d, ue));
  }
}

TEST(BestCell, SingleStation) {
  const auto d = deployment_of({station(1, {10.0, 10.0})});
  EXPECT_EQ(best_cell(d, {900.0, 900.0}).cell, 1);
}

TEST(BestCell, CloserIdenticalStationWins) {
  const auto d = deployment_of({station(1, {100.0, 500.0}), station(2, {300.0, 500.0})});
  EXPECT_EQ(best_cell(d, {600.0, 500.0}).cell, 2);
}

TEST(BestCell, TieGoesToLowestId) {
  // Mirror-image stations; the UE on the mirror axis sees equal power.
  const auto d = deployment_of({station(1, {400.0, 500.0}, {0.0}), station(2, {600.0, 500.0}, {180.0})});
  EXPECT_EQ(best_cell(d, {500.0, 500.0}).cell, 1);
  const auto swapped = deployment_of({station(1, {600.0, 500.0}, {180.0}), station(2, {400.0, 500.0}, {0.0})});
  EXPECT_EQ(best_cell(swapped, {500.0, 500.0}).cell, 1);
}

TEST(BestCell, InvariantUnderTxPowerShift) {
  const auto d = generate_deployment(3, AreaConfig{}, 30, kRadio, 3);
  auto shifted = d;
  shifted.radio.tx_power_dbm += 17.5;
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const Point ue{rng.uniform(0.0, 1000.0), rng.uniform(0.0, 1000.0)};
    EXPECT_EQ(best_cell(d, ue).cell, best_cell(shifted, ue).cell);
  }
}

TEST(Validate, RejectsBrokenDeployments) {
  auto d = deployment_of({station(1, {10.0, 10.0})});
  EXPECT_NO_THROW(d.validate());
  d.stations[0].id = 2;
  EXPECT_THROW(d.validate(), InvalidConfig);
  d = deployment_of({station(1, {10.0, 10.0}, {0.0, 0.0})});
  EXPECT_THROW(d.validate(), InvalidConfig);
  d = deployment_of({station(1, {10.0, 10.0}, {360.0})});
  EXPECT_THROW(d.validate(), InvalidConfig);
  d = deployment_of({station(1, {-1.0, 10.0})});
  EXPECT_THROW(d.validate(), InvalidConfig);
  RadioConfig bad;
  bad.beamwidth_3db = 0.0;
  EXPECT_THROW(bad.validate(), InvalidConfig);
}

}  // namespace
}  // namespace hoseq
