#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "swarmgrid/errors.hpp"
#include "swarmgrid/geometry.hpp"
#include "swarmgrid/uav_power.hpp"

using namespace swarmgrid;
using namespace swarmgrid::uav_power;

namespace {

// Sea-level hover terms written out from the rotor-disk model, independent of
// the library decomposition.
struct HoverTerms {
    double blade_w;
    double induced_w;
};

HoverTerms reference_hover_terms(const AirframeParams& af, double rho) {
    const double vt = af.tip_speed_mps;
    const double blade = af.rotor_count * (af.profile_drag_coeff / 8.0) * rho *
                         af.rotor_solidity * af.rotor_area_m2 * vt * vt * vt;
    const double induced =
        af.weight_n * std::sqrt(af.weight_n / (2.0 * af.rotor_count * rho * af.rotor_area_m2));
    return {blade, induced};
}

} // namespace

TEST_CASE("air density follows the altitude power law") {
    CHECK(air_density(0.0) == doctest::Approx(1.225).epsilon(1e-12));
    const double expect = 1.225 * std::pow(1.0 - 2.2558e-5 * 500.0, 4.2577);
    CHECK(air_density(500.0) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(air_density(500.0, DensityModel::paper_relative) ==
          doctest::Approx(expect / 1.225).epsilon(1e-12));
    CHECK_THROWS_AS(air_density(-1.0), std::domain_error);
}

TEST_CASE("counter wind extrapolates by the shear power law") {
    const WindContext wind{};
    CHECK(counter_wind_speed(5.0, wind, 10.0) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(counter_wind_speed(5.0, wind, 100.0) ==
          doctest::Approx(5.0 * std::pow(10.0, 0.335)).epsilon(1e-12));
    CHECK(counter_wind_speed(0.0, wind, 321.0) == 0.0);
    CHECK_THROWS_AS(counter_wind_speed(-1.0, wind, 50.0), std::domain_error);
    CHECK_THROWS_AS(counter_wind_speed(5.0, wind, 0.0), std::domain_error);
}

TEST_CASE("sea level hover power matches the term-wise oracle") {
    const auto af = default_airframe();
    const auto terms = reference_hover_terms(af, 1.225);
    // Frozen reference decomposition for the default quadrotor.
    CHECK(terms.blade_w == doctest::Approx(3.89994).epsilon(1e-3));
    CHECK(terms.induced_w == doctest::Approx(151.799648).epsilon(1e-3));

    const double hover = horizontal_power_w(0.0, 0.0, af);
    CHECK(hover == doctest::Approx(terms.blade_w + terms.induced_w).epsilon(1e-3));
    CHECK(hover == doctest::Approx(155.699586).epsilon(1e-3));
    // Hover is the zero-climb limit of the vertical model too.
    CHECK(vertical_power_w(0.0, 0.0, af) == doctest::Approx(hover).epsilon(1e-12));
}

TEST_CASE("vertical power at the reference climb speed") {
    const auto af = default_airframe();
    const double rho = 1.225;
    const double hover_term = 2.0 * af.weight_n / (af.rotor_count * rho * af.rotor_area_m2);
    const double expect = (af.weight_n / 2.0) * (10.0 + std::sqrt(100.0 + hover_term)) +
                          reference_hover_terms(af, rho).blade_w;
    CHECK(vertical_power_w(10.0, 0.0, af) == doctest::Approx(expect).epsilon(1e-9));
    CHECK(vertical_power_w(10.0, 0.0, af) == doctest::Approx(316.107).epsilon(1e-4));
    // Descent recovers energy relative to climb but still costs power.
    CHECK(vertical_power_w(-10.0, 0.0, af) < vertical_power_w(10.0, 0.0, af));
    CHECK(vertical_power_w(-10.0, 0.0, af) > 0.0);
}

TEST_CASE("level flight power dips at an interior airspeed") {
    const auto af = default_airframe();
    const double hover = horizontal_power_w(0.0, 100.0, af);
    double best_v = 0.0;
    double best_p = hover;
    for (double v = 0.1; v <= 15.0 + 1e-9; v += 0.1) {
        const double p = horizontal_power_w(v, 100.0, af);
        if (p < best_p) {
            best_p = p;
            best_v = v;
        }
    }
    CHECK(best_v > 0.1);
    CHECK(best_v < 15.0);
    CHECK(best_p < hover);
    CHECK(best_p < horizontal_power_w(15.0, 100.0, af));
}

TEST_CASE("thin air raises the induced draw") {
    const auto af = default_airframe();
    CHECK(horizontal_power_w(0.0, 2000.0, af) > horizontal_power_w(0.0, 0.0, af));
}

TEST_CASE("flight energy decomposes into climb, cruise, and hover segments") {
    const auto af = default_airframe();
    const WindContext wind{};
    const auto layout = geometry::hover_layout(4, 600.0);
    const double h = 350.0;
    const double v_wind = 4.0;

    const std::size_t j = 1;
    const double d_j = layout.distances_m[j];
    const double climb_s = h / af.climb_speed_mps;
    const double cruise_s = d_j / af.cruise_speed_mps;
    const double hover_s = af.flight_duration_h * 3600.0 - 2.0 * (climb_s + cruise_s);
    REQUIRE(hover_s > 0.0);
    const double v_hover = counter_wind_speed(v_wind, wind, h);
    const double expect_ws = vertical_power_w(af.climb_speed_mps, h, af) * climb_s +
                             vertical_power_w(-af.climb_speed_mps, h, af) * climb_s +
                             horizontal_power_w(af.cruise_speed_mps, h, af) * 2.0 * cruise_s +
                             horizontal_power_w(v_hover, h, af) * hover_s;
    CHECK(flight_energy_wh(j, layout, h, v_wind, wind, af) ==
          doctest::Approx(expect_ws / 3600.0).epsilon(1e-12));
}

TEST_CASE("flights that cannot fit or hold position are rejected") {
    const auto af = default_airframe();
    const WindContext wind{};
    const auto layout = geometry::hover_layout(3, 40000.0);
    // 8 km of one-way cruise at 10 m/s cannot fit a 30 minute window.
    CHECK_THROWS_AS(flight_energy_wh(0, layout, 100.0, 0.0, wind, af), InfeasibleFlightError);

    const auto small = geometry::hover_layout(3, 500.0);
    // 20 m/s at 10 m becomes > 30 m/s at 350 m under the shear law.
    CHECK_THROWS_AS(flight_energy_wh(0, small, 350.0, 20.0, wind, af), InfeasibleFlightError);
    CHECK_THROWS_AS(flight_energy_wh(7, small, 100.0, 0.0, wind, af), std::domain_error);
}

TEST_CASE("swarm hourly load aggregates per sortie energies") {
    const auto af = default_airframe();
    const auto radio = channel::default_radio();
    const auto env = channel::suburban();
    const WindContext wind{};
    const int k = 5;
    const double d_max = 700.0;
    const double v_wind = 3.0;

    const auto layout = geometry::hover_layout(k, d_max);
    const auto elev = channel::optimal_elevation(env, radio.antenna_efficiency);
    const double h = layout.cell_radius_m * elev.height_ratio;
    double expect = 0.0;
    for (std::size_t j = 0; j < layout.centers.size(); ++j) {
        expect += flight_energy_wh(j, layout, h, v_wind, wind, af);
    }
    expect /= af.flight_duration_h;
    CHECK(swarm_hourly_load_wh(k, d_max, v_wind, env, radio, af, wind) ==
          doctest::Approx(expect).epsilon(1e-12));
}
