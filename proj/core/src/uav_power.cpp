#include "swarmgrid/uav_power.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "swarmgrid/errors.hpp"

namespace swarmgrid::uav_power {
namespace {

constexpr double kSeaLevelDensity = 1.225; // kg/m^3

double blade_profile_power_w(double rho, const AirframeParams& af) {
    const double vt = af.tip_speed_mps;
    return (af.profile_drag_coeff / 8.0) * rho * af.rotor_solidity * af.rotor_area_m2 * vt * vt * vt;
}

void check_airframe(const AirframeParams& af) {
    if (af.rotor_count < 1 || !(af.weight_n > 0.0) || !(af.rotor_area_m2 > 0.0) ||
        !(af.tip_speed_mps > 0.0) || !(af.flight_duration_h > 0.0)) {
        throw std::domain_error("airframe constants must be positive");
    }
}

} // namespace

AirframeParams default_airframe() { return {}; }

double air_density(double h_m, DensityModel model) {
    if (!(h_m >= 0.0)) throw std::domain_error("altitude must be non-negative");
    const double ratio = std::pow(1.0 - 2.2558e-5 * h_m, 4.2577);
    return model == DensityModel::absolute ? kSeaLevelDensity * ratio : ratio;
}

double counter_wind_speed(double v_wind_mps, const WindContext& wind, double h_m) {
    if (!(v_wind_mps >= 0.0)) throw std::domain_error("wind speed must be non-negative");
    if (!(h_m > 0.0) || !(wind.reference_height_m > 0.0)) {
        throw std::domain_error("wind shear extrapolation needs positive heights");
    }
    return v_wind_mps * std::pow(h_m / wind.reference_height_m, wind.shear_exponent);
}

double horizontal_power_w(double v_mps, double h_m, const AirframeParams& af) {
    check_airframe(af);
    if (!(v_mps >= 0.0)) throw std::domain_error("airspeed must be non-negative");
    const double rho = air_density(h_m, af.density_model);
    const double n = af.rotor_count;
    const double vt2 = af.tip_speed_mps * af.tip_speed_mps;

    const double blade = n * blade_profile_power_w(rho, af) * (1.0 + 3.0 * v_mps * v_mps / vt2);
    const double fuselage =
        0.5 * af.fuselage_drag_coeff * af.fuselage_area_m2 * rho * v_mps * v_mps * v_mps;
    const double w = af.weight_n;
    const double disc = w * w / (4.0 * n * n * rho * rho * af.rotor_area_m2 * af.rotor_area_m2);
    const double v2 = v_mps * v_mps;
    const double induced = w * std::sqrt(std::sqrt(disc + v2 * v2 / 4.0) - v2 / 2.0);
    return blade + fuselage + induced;
}

double vertical_power_w(double v_climb_mps, double h_m, const AirframeParams& af) {
    check_airframe(af);
    const double rho = air_density(h_m, af.density_model);
    const double w = af.weight_n;
    const double hover_term = 2.0 * w / (af.rotor_count * rho * af.rotor_area_m2);
    return (w / 2.0) * (v_climb_mps + std::sqrt(v_climb_mps * v_climb_mps + hover_term)) +
           af.rotor_count * blade_profile_power_w(rho, af);
}

double flight_energy_wh(std::size_t j, const geometry::SwarmLayout& layout, double h_m,
                        double v_wind_mps, const WindContext& wind, const AirframeParams& af) {
    check_airframe(af);
    if (j >= layout.centers.size()) throw std::domain_error("UAV index outside layout");
    if (!(h_m >= 0.0)) throw std::domain_error("hover height must be non-negative");
    if (!(af.climb_speed_mps > 0.0) || !(af.cruise_speed_mps > 0.0)) {
        throw std::domain_error("climb and cruise speeds must be positive");
    }

    const double d_j = layout.distances_m[j];
    const double window_s = af.flight_duration_h * 3600.0;
    const double transit_s = 2.0 * (h_m / af.climb_speed_mps + d_j / af.cruise_speed_mps);
    if (transit_s >= window_s) {
        throw InfeasibleFlightError("transit of " + std::to_string(transit_s) +
                                    " s does not fit the " + std::to_string(window_s) +
                                    " s flight window");
    }

    const double v_hover = h_m > 0.0 ? counter_wind_speed(v_wind_mps, wind, h_m) : v_wind_mps;
    if (v_hover > kMaxHoverWindMps) {
        throw InfeasibleFlightError("hover headwind " + std::to_string(v_hover) +
                                    " m/s exceeds the " + std::to_string(kMaxHoverWindMps) +
                                    " m/s envelope");
    }

    const double climb_s = h_m / af.climb_speed_mps;
    const double cruise_s = d_j / af.cruise_speed_mps;
    const double hover_s = window_s - transit_s;
    const double energy_ws = vertical_power_w(af.climb_speed_mps, h_m, af) * climb_s +
                             vertical_power_w(-af.climb_speed_mps, h_m, af) * climb_s +
                             horizontal_power_w(af.cruise_speed_mps, h_m, af) * 2.0 * cruise_s +
                             horizontal_power_w(v_hover, h_m, af) * hover_s;
    return energy_ws / 3600.0;
}

double swarm_hourly_load_wh(int k, double d_max_m, double v_wind_mps,
                            const channel::Environment& env, const channel::RadioParams& radio,
                            const AirframeParams& af, const WindContext& wind) {
    const geometry::SwarmLayout layout = geometry::hover_layout(k, d_max_m);
    const channel::ElevationSolution elev =
        channel::optimal_elevation(env, radio.antenna_efficiency);
    const double h_m = layout.cell_radius_m * elev.height_ratio;
    double total_wh = 0.0;
    for (std::size_t j = 0; j < layout.centers.size(); ++j) {
        total_wh += flight_energy_wh(j, layout, h_m, v_wind_mps, wind, af);
    }
    return total_wh / af.flight_duration_h;
}

} // namespace swarmgrid::uav_power
