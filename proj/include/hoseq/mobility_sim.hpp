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
#ifndef HOSEQ_MOBILITY_SIM_HPP
#define HOSEQ_MOBILITY_SIM_HPP

// Straight-line UE mobility with relocation at the area boundary, the A3
// handover state machine under periodic reporting, and recording of the
// mobility-history traces (cell id + dwell in reporting steps).

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hoseq/errors.hpp"
#include "hoseq/geometry_radio.hpp"
#include "hoseq/rng.hpp"

namespace hoseq {

// UEs travel straight legs. On leaving the area a UE relocates: either to the
// start of the next leg of its own recurring itinerary (a cyclic list of routes
// drawn from a shared pool), or, with probability `random_relocation_prob`, to
// a random pool route. With `n_routes == 0` relocation is to a uniformly random
// position and heading.
struct MobilityConfig {
  double speed = 5.0;         // m per reporting step (mean over UEs)
  double speed_spread = 0.5;  // per-UE speed uniform in speed * [1 - s, 1 + s]
  std::size_t n_routes = 8;
  std::size_t itinerary_legs = 3;
  double random_relocation_prob = 0.3;
  bool split_on_relocation = false;  // start a new trace segment at every relocation

  void validate() const {
    if (!(speed >= 0.0)) throw InvalidConfig("speed must be >= 0");
    if (!(speed_spread >= 0.0 && speed_spread <= 1.0)) throw InvalidConfig("speed_spread must lie in [0, 1]");
    if (!(random_relocation_prob >= 0.0 && random_relocation_prob <= 1.0))
      throw InvalidConfig("random_relocation_prob must lie in [0, 1]");
    if (n_routes > 0 && itinerary_legs == 0) throw InvalidConfig("itinerary_legs must be >= 1 when routes are used");
  }
};

struct A3Config {
  double hysteresis_db = 0.0;
  int time_to_trigger = 0;  // reporting steps

  void validate() const {
    if (!(hysteresis_db >= 0.0)) throw InvalidConfig("hysteresis must be >= 0");
    if (time_to_trigger < 0) throw InvalidConfig("time_to_trigger must be >= 0");
  }
};

struct Route {
  Point start;
  double heading;  // deg
};

struct UeState {
  Point position;
  double heading = 0.0;  // deg, counter-clockwise from +x
  double speed = 0.0;
  CellId serving_cell = 0;
  std::size_t dwell_counter = 0;
  std::map<CellId, int> a3_timers;  // only cells whose condition currently holds
  std::vector<std::size_t> itinerary;
  std::size_t leg = 0;
  bool relocated = false;  // set by the most recent step_ue call
};

struct TraceEntry {
  int id = 0;  // cell id, or beam id for beam traces
  std::size_t dwell = 0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct MobilityTrace {
  std::string ue_id;
  std::vector<TraceEntry> entries;

  std::size_t total_dwell() const {
    std::size_t s = 0;
    for (const auto& e : entries) s += e.dwell;
    return s;
  }

  friend bool operator==(const MobilityTrace&, const MobilityTrace&) = default;
};

// Pool routes are drawn like a random relocation: uniform start inside the
// area, uniform heading.
inline std::vector<Route> make_routes(const AreaConfig& area, std::size_t n, Rng& rng) {
  std::vector<Route> routes;
  routes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point start{rng.uniform(0.0, area.width), rng.uniform(0.0, area.height)};
    routes.push_back({start, rng.uniform(0.0, 360.0)});
  }
  return routes;
}

inline UeState step_ue(UeState ue, const MobilityConfig& config, const AreaConfig& area,
                       std::span<const Route> routes, Rng& rng) {
  const double rad = ue.heading * std::numbers::pi / 180.0;
  const Point next{ue.position.x + ue.speed * std::cos(rad), ue.position.y + ue.speed * std::sin(rad)};
  ue.relocated = false;
  if (area.contains(next)) {
    ue.position = next;
    return ue;
  }
  ue.relocated = true;
  if (routes.empty() || ue.itinerary.empty()) {
    ue.position = {rng.uniform(0.0, area.width), rng.uniform(0.0, area.height)};
    ue.heading = rng.uniform(0.0, 360.0);
    return ue;
  }
  ue.leg = (ue.leg + 1) % ue.itinerary.size();
  const bool detour = rng.bernoulli(config.random_relocation_prob);
  const Route& r = routes[detour ? rng.below(routes.size()) : ue.itinerary[ue.leg]];
  ue.position = r.start;
  ue.heading = r.heading;
  return ue;
}

struct A3Decision {
  std::map<CellId, int> timers;
  std::optional<CellId> target;
};

// One periodic report. A neighbour qualifies while its RSRP exceeds the
// serving RSRP by more than the hysteresis; the handover fires at the first
// report where some qualifying run is longer than time_to_trigger.
inline A3Decision evaluate_a3(double serving_rsrp, const std::map<CellId, double>& neighbor_rsrps,
                              const std::map<CellId, int>& timers, const A3Config& a3) {
  A3Decision out;
  std::optional<CellId> target;
  double target_rsrp = -INFINITY;
  for (const auto& [cell, p] : neighbor_rsrps) {
    if (!(p > serving_rsrp + a3.hysteresis_db)) continue;
    const auto it = timers.find(cell);
    const int held = (it == timers.end() ? 0 : it->second) + 1;
    out.timers[cell] = held;
    if (held > a3.time_to_trigger && p > target_rsrp) {
      target = cell;
      target_rsrp = p;
    }
  }
  if (target) out.timers.clear();
  out.target = target;
  return out;
}

// Per-report observation hook for instrumentation.
struct StepEvent {
  std::size_t ue = 0;
  std::size_t step = 0;  // 1-based report index; report 0 is the spawn
  CellId serving_before = 0;
  CellId serving_after = 0;
  std::optional<CellId> handover;
  bool relocated = false;
  Point position;
  std::span<const double> cell_rsrps;  // index = cell id - 1
  const std::map<CellId, int>* timers_before = nullptr;
};

using StepObserver = std::function<void(const StepEvent&)>;

// Runs one UE from `ue` (position, heading, speed, itinerary already set) for
// n_steps reports and appends its trace, or one trace per relocation segment
// with split_on_relocation, to `traces`. The spawn report counts as the first
// step, so dwells sum to n_steps.
inline void simulate_ue(const Deployment& deployment, UeState ue, const std::string& ue_id, std::size_t n_steps,
                        const MobilityConfig& mobility, const A3Config& a3, std::span<const Route> routes, Rng& rng,
                        std::vector<MobilityTrace>& traces, std::size_t ue_index = 0,
                        const StepObserver& observer = {}) {
  const AreaConfig& area = deployment.area;
  std::vector<double> powers(deployment.size());
  std::map<CellId, double> neighbors;

  ue.serving_cell = best_cell(deployment, ue.position).cell;
  ue.dwell_counter = 1;
  ue.a3_timers.clear();
  traces.push_back({ue_id, {{ue.serving_cell, 1}}});

  for (std::size_t step = 1; step < n_steps; ++step) {
    const CellId before = ue.serving_cell;
    const std::map<CellId, int> timers_before = observer ? ue.a3_timers : std::map<CellId, int>{};
    ue = step_ue(std::move(ue), mobility, area, routes, rng);

    for (const auto& bs : deployment.stations) {
      powers[static_cast<std::size_t>(bs.id - 1)] = cell_rsrp(bs, ue.position, deployment.radio);
    }

    std::optional<CellId> handover;
    if (ue.relocated) {
      // Not a handover: the UE re-attaches to the best cell at its new spot.
      ue.a3_timers.clear();
      ue.serving_cell = best_cell(deployment, ue.position).cell;
      if (mobility.split_on_relocation) {
        traces.push_back({ue_id, {{ue.serving_cell, 0}}});
      } else if (traces.back().entries.back().id != ue.serving_cell) {
        traces.back().entries.push_back({ue.serving_cell, 0});
      }
    } else {
      neighbors.clear();
      for (std::size_t i = 0; i < powers.size(); ++i) {
        const auto cell = static_cast<CellId>(i + 1);
        if (cell != ue.serving_cell) neighbors.emplace_hint(neighbors.end(), cell, powers[i]);
      }
      auto decision =
          evaluate_a3(powers[static_cast<std::size_t>(ue.serving_cell - 1)], neighbors, ue.a3_timers, a3);
      ue.a3_timers = std::move(decision.timers);
      handover = decision.target;
      if (handover) {
        ue.serving_cell = *handover;
        traces.back().entries.push_back({ue.serving_cell, 0});
      }
    }

    auto& current = traces.back().entries.back();
    ++current.dwell;
    ue.dwell_counter = current.dwell;

    if (observer) {
      observer(StepEvent{ue_index, step, before, ue.serving_cell, handover, ue.relocated, ue.position, powers,
                         &timers_before});
    }
  }
}

// UE u (ue_id "u+1") draws its speed, itinerary and spawn from its own stream
// derive_seed(seed, 1 + u); the route pool comes from derive_seed(seed, 0).
inline std::vector<MobilityTrace> run_simulation(const Deployment& deployment, std::size_t n_ues,
                                                 std::size_t n_steps, const MobilityConfig& mobility,
                                                 const A3Config& a3, std::uint64_t seed,
                                                 const StepObserver& observer = {}) {
  if (deployment.stations.empty()) throw EmptyDeployment("deployment has no base stations");
  if (n_ues == 0) throw InvalidConfig("n_ues must be at least 1");
  if (n_steps == 0) throw InvalidConfig("n_steps must be at least 1");
  mobility.validate();
  a3.validate();

  const AreaConfig& area = deployment.area;
  Rng route_rng(derive_seed(seed, 0));
  const std::vector<Route> routes = make_routes(area, mobility.n_routes, route_rng);

  std::vector<MobilityTrace> traces;
  for (std::size_t u = 0; u < n_ues; ++u) {
    Rng rng(derive_seed(seed, 1 + u));
    UeState ue;
    ue.speed = mobility.speed * (1.0 + mobility.speed_spread * (2.0 * rng.uniform() - 1.0));
    if (!routes.empty()) {
      ue.itinerary.resize(mobility.itinerary_legs);
      for (auto& leg : ue.itinerary) leg = rng.below(routes.size());
      ue.position = routes[ue.itinerary[0]].start;
      ue.heading = routes[ue.itinerary[0]].heading;
    } else {
      ue.position = {rng.uniform(0.0, area.width), rng.uniform(0.0, area.height)};
      ue.heading = rng.uniform(0.0, 360.0);
    }
    simulate_ue(deployment, std::move(ue), std::to_string(u + 1), n_steps, mobility, a3, routes, rng, traces, u,
                observer);
  }
  return traces;
}

}  // namespace hoseq

#endif  // HOSEQ_MOBILITY_SIM_HPP
