#pragma once

#include "swarmgrid/channel.hpp"
#include "swarmgrid/geometry.hpp"

namespace swarmgrid::uav_power {

enum class DensityModel {
    absolute,       // altitude profile anchored at 1.225 kg/m^3 sea-level density
    paper_relative, // bare (1 - 2.2558e-5 H)^4.2577 ratio, for comparison runs
};

/// Rotary-wing airframe constants. Defaults describe the reference quadrotor.
struct AirframeParams {
    double weight_n = 23.84;
    int rotor_count = 4;
    double tip_speed_mps = 102.0;
    double fuselage_area_m2 = 0.038;
    double fuselage_drag_coeff = 0.9;
    double rotor_area_m2 = 0.06;
    double profile_drag_coeff = 0.002;
    double rotor_solidity = 0.05;
    double climb_speed_mps = 10.0;
    double cruise_speed_mps = 10.0;
    double flight_duration_h = 0.5;
    DensityModel density_model = DensityModel::absolute;
};

AirframeParams default_airframe();

/// Wind shear profile of the site: measurement height and power-law exponent.
struct WindContext {
    double reference_height_m = 10.0;
    double shear_exponent = 0.335;
};

/// Hover headwinds above this leave the airframe unable to hold position.
inline constexpr double kMaxHoverWindMps = 30.0;

/// Air density in kg/m^3 at altitude h_m (absolute model), or the unitless
/// altitude ratio under DensityModel::paper_relative.
double air_density(double h_m, DensityModel model = DensityModel::absolute);

/// Wind speed extrapolated from the reference height to altitude h_m by the
/// power law. h_m must be positive.
double counter_wind_speed(double v_wind_mps, const WindContext& wind, double h_m);

/// Level-flight electrical power (W) at ground speed v_mps and altitude h_m:
/// blade profile, fuselage parasite, and induced terms.
double horizontal_power_w(double v_mps, double h_m, const AirframeParams& af);

/// Climb (v_c > 0) or descent (v_c < 0) power (W) at altitude h_m.
double vertical_power_w(double v_climb_mps, double h_m, const AirframeParams& af);

/// Energy (Wh) of one sortie of UAV j: climb to h_m, cruise to its hover
/// point, hover against the altitude-corrected wind for the rest of the
/// flight window, cruise back, descend. Throws InfeasibleFlightError when
/// transit does not fit the window or the hover headwind exceeds the cap.
double flight_energy_wh(std::size_t j, const geometry::SwarmLayout& layout, double h_m,
                        double v_wind_mps, const WindContext& wind, const AirframeParams& af);

/// Energy (Wh) the whole k-UAV swarm draws from the ground station over one
/// hour of continuous coverage: per-sortie energies scaled by the sortie
/// rate 1 / flight_duration_h. Hover height follows the loss-optimal
/// elevation for the environment and antenna.
double swarm_hourly_load_wh(int k, double d_max_m, double v_wind_mps,
                            const channel::Environment& env, const channel::RadioParams& radio,
                            const AirframeParams& af, const WindContext& wind);

} // namespace swarmgrid::uav_power
