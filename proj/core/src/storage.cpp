#include "swarmgrid/storage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swarmgrid::storage {
namespace {

void check_battery(const GroundBattery& b) {
    if (b.cell_count < 0 || !(b.cell_capacity_wh > 0.0)) {
        throw std::domain_error("battery needs a non-negative cell count and positive cell size");
    }
    if (!(b.conversion_efficiency > 0.0) || b.conversion_efficiency > 1.0) {
        throw std::domain_error("conversion efficiency must be in (0, 1]");
    }
}

} // namespace

ChargerPlan charger_requirements(int n_uav, const ChargerSpec& spec) {
    if (n_uav < 1) throw std::domain_error("swarm needs at least one UAV");
    if (!(spec.uav_battery_wh > 0.0) || !(spec.charge_power_w > 0.0) ||
        !(spec.flight_duration_h > 0.0)) {
        throw std::domain_error("charger ratings must be positive");
    }
    ChargerPlan plan;
    plan.recharge_h = spec.uav_battery_wh / spec.charge_power_w;
    const double packs = n_uav * (plan.recharge_h / spec.flight_duration_h + 1.0);
    // ceil with an ulp guard so exact integer ratios do not round up.
    plan.battery_count = static_cast<int>(std::ceil(packs - 1e-9));
    return plan;
}

double battery_step(double state_wh, double net_energy_wh, const GroundBattery& battery) {
    check_battery(battery);
    const double eff = battery.conversion_efficiency;
    const double scaled = net_energy_wh >= 0.0 ? eff * net_energy_wh : net_energy_wh / eff;
    return std::min(battery.capacity_wh(), state_wh + scaled);
}

SimulationResult simulate_horizon(std::span<const double> load_wh, std::span<const double> gen_w,
                                  const GroundBattery& battery, bool cyclic) {
    check_battery(battery);
    if (load_wh.size() != gen_w.size() || load_wh.empty()) {
        throw std::domain_error("load and generation series must be non-empty and equal length");
    }
    SimulationResult result;
    result.trajectory_wh.reserve(load_wh.size());
    const double initial = battery.capacity_wh();
    double state = initial;
    result.min_state_wh = initial;
    for (std::size_t h = 0; h < load_wh.size(); ++h) {
        state = battery_step(state, gen_w[h] - load_wh[h], battery);
        result.trajectory_wh.push_back(state);
        result.min_state_wh = std::min(result.min_state_wh, state);
        if (state < 0.0 && result.first_violation_hour < 0) {
            result.first_violation_hour = static_cast<int>(h);
        }
    }
    result.feasible = result.first_violation_hour < 0 && (!cyclic || state >= initial);
    return result;
}

int min_feasible_cells(std::span<const double> load_wh, std::span<const double> gen_w,
                       const GroundBattery& prototype, int n_max) {
    if (n_max < 0) throw std::domain_error("cell bound must be non-negative");
    auto feasible = [&](int n) {
        GroundBattery b = prototype;
        b.cell_count = n;
        return simulate_horizon(load_wh, gen_w, b).feasible;
    };
    if (!feasible(n_max)) return -1;
    int lo = 0;
    int hi = n_max;
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (feasible(mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

} // namespace swarmgrid::storage
