#pragma once

#include <ostream>
#include <span>
#include <string>

#include "swarmgrid/scenario.hpp"
#include "swarmgrid/sizing.hpp"

namespace swarmgrid::report {

/// Full machine-readable report: the resolved scenario, the search outcome
/// with ranked records, per-record cost ledgers to the cent, and charger
/// requirements. Deterministic: no timestamps, stable ordering, canonical
/// number text. Identical inputs produce identical bytes.
std::string report_json(const scenario::Scenario& s, const sizing::GssResult& result);

/// Candidate rows only, ordered by radius: radius, efficiency, cost,
/// objective, and chosen counts per feasible candidate.
void write_sweep_csv(std::ostream& out, const sizing::GssResult& result);

/// Hourly ground-battery charge state.
void write_battery_trajectory_csv(std::ostream& out, std::span<const std::string> timestamps,
                                  std::span<const double> trajectory_wh);

/// Hourly swarm size and energy draw of a load profile.
void write_swarm_profile_csv(std::ostream& out, std::span<const std::string> timestamps,
                             const sizing::LoadProfile& load);

} // namespace swarmgrid::report
