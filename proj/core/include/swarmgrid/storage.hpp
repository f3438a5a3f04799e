#pragma once

#include <span>
#include <vector>

#include "swarmgrid/money.hpp"

namespace swarmgrid::storage {

/// On-board UAV battery and ground charger ratings.
struct ChargerSpec {
    double uav_battery_wh = 180.0;
    double charge_power_w = 180.0;
    double flight_duration_h = 0.5;
};

struct ChargerPlan {
    double recharge_h = 0.0; // time to refill one UAV battery
    int battery_count = 0;   // batteries in rotation so coverage never pauses
};

/// Batteries needed to keep n_uav UAVs continuously airborne while drained
/// packs recharge: ceil(n_uav * (recharge/flight + 1)).
ChargerPlan charger_requirements(int n_uav, const ChargerSpec& spec);

/// Ground storage bank built from identical cells.
struct GroundBattery {
    int cell_count = 0;
    double cell_capacity_wh = 12.6;
    double conversion_efficiency = 0.95;
    Money cell_cost = Money::from_cents(575);

    [[nodiscard]] double capacity_wh() const { return cell_count * cell_capacity_wh; }
};

/// One-hour state update: surplus charges at the conversion efficiency and
/// clamps at capacity; deficit discharges at 1/efficiency. The result may go
/// negative; a negative state is the infeasibility signal, not an error.
double battery_step(double state_wh, double net_energy_wh, const GroundBattery& battery);

struct SimulationResult {
    bool feasible = false;
    double min_state_wh = 0.0;
    int first_violation_hour = -1; // 0-based hour of the first negative state
    std::vector<double> trajectory_wh;
};

/// Steps the bank hour by hour from a full initial state. gen_w is the mean
/// generated power per hour (numerically equal to Wh over one hour);
/// load_wh the swarm draw. Feasible iff the state never goes negative, and
/// additionally ends no lower than it started when cyclic is set.
SimulationResult simulate_horizon(std::span<const double> load_wh, std::span<const double> gen_w,
                                  const GroundBattery& battery, bool cyclic = false);

/// Smallest cell count in [0, n_max] whose bank survives the horizon, by
/// binary search (feasibility is monotone in the cell count). Returns -1
/// when even n_max cells are infeasible.
int min_feasible_cells(std::span<const double> load_wh, std::span<const double> gen_w,
                       const GroundBattery& prototype, int n_max);

} // namespace swarmgrid::storage
