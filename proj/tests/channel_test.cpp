#include "doctest.h"

#include <cmath>
#include <numbers>

#include "swarmgrid/channel.hpp"
#include "swarmgrid/errors.hpp"
#include "swarmgrid/geometry.hpp"

using namespace swarmgrid;
using namespace swarmgrid::channel;

namespace {

constexpr double kLightSpeed = 3.0e8;

// Path loss written out term by term, independent of the library chain.
double reference_loss_db(double d_m, double h_m, const Environment& env, const RadioParams& r) {
    const double theta = std::atan2(h_m, d_m) * 180.0 / std::numbers::pi;
    const double p_los = 1.0 / (1.0 + env.a * std::exp(-env.b * (theta - env.a)));
    const double gain = r.antenna_efficiency *
                        10.0 * std::log10(2.0 / (1.0 - std::sin(theta * std::numbers::pi / 180.0)));
    const double dist = std::hypot(d_m, h_m);
    return p_los * (env.eta_los_db - env.eta_nlos_db) + 20.0 * std::log10(dist) +
           20.0 * std::log10(4.0 * std::numbers::pi * r.carrier_hz / kLightSpeed) +
           env.eta_nlos_db - gain;
}

// Grid argmin of the loss over the elevation angle at fixed ground distance.
double grid_optimal_elevation(const Environment& env, double a_eff) {
    RadioParams radio = default_radio();
    radio.antenna_efficiency = a_eff;
    const double d = 1000.0;
    double best_theta = 0.0;
    double best_loss = 1e300;
    for (double theta = 0.01; theta < 89.99; theta += 0.01) {
        const double h = d * std::tan(theta * std::numbers::pi / 180.0);
        const double loss = path_loss_db(d, h, env, radio);
        if (loss < best_loss) {
            best_loss = loss;
            best_theta = theta;
        }
    }
    return best_theta;
}

} // namespace

TEST_CASE("los probability follows the sigmoid and saturates overhead") {
    const auto env = suburban();
    const double theta = 30.0;
    const double expect = 1.0 / (1.0 + env.a * std::exp(-env.b * (theta - env.a)));
    CHECK(los_probability(theta, env) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(los_probability(90.0, env) > 0.999);
    CHECK(los_probability(60.0, env) > los_probability(10.0, env));
    CHECK(los_probability(10.0, urban()) < los_probability(10.0, env));
}

TEST_CASE("antenna gain matches the conical beam form") {
    for (double theta : {0.0, 15.0, 45.0, 80.0}) {
        const double expect =
            0.9 * 10.0 * std::log10(2.0 / (1.0 - std::sin(theta * std::numbers::pi / 180.0)));
        CHECK(antenna_gain_db(theta, 0.9) == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(antenna_gain_db(0.0, 1.0) == doctest::Approx(10.0 * std::log10(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(antenna_gain_db(90.0, 0.9), std::domain_error);
}

TEST_CASE("carrier constant at 5.8 GHz") {
    CHECK(frequency_constant_db(5.8e9) == doctest::Approx(47.710332).epsilon(1e-6));
}

TEST_CASE("path loss agrees with the term-wise reference") {
    const auto radio = default_radio();
    for (const auto& env : {suburban(), urban()}) {
        for (double d : {200.0, 800.0, 1500.0}) {
            for (double h : {100.0, 400.0, 1200.0}) {
                CHECK(path_loss_db(d, h, env, radio) ==
                      doctest::Approx(reference_loss_db(d, h, env, radio)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("optimal elevation solves the stationarity residual") {
    // Frozen roots for the two environments at both supported apertures.
    struct Case {
        Environment env;
        double a_eff;
        double theta_deg;
    };
    const Case cases[] = {
        {suburban(), 0.6, 27.195458},
        {suburban(), 0.9, 54.903214},
        {urban(), 0.6, 49.558149},
        {urban(), 0.9, 60.765943},
    };
    for (const auto& c : cases) {
        CAPTURE(c.env.label);
        CAPTURE(c.a_eff);
        const auto sol = optimal_elevation(c.env, c.a_eff);
        CHECK(sol.theta_deg == doctest::Approx(c.theta_deg).epsilon(1e-6));
        CHECK(std::abs(elevation_residual(sol.theta_deg, c.env, c.a_eff)) < 1e-8);
        CHECK(sol.height_ratio ==
              doctest::Approx(std::tan(sol.theta_deg * std::numbers::pi / 180.0)).epsilon(1e-12));
        // The root is the true loss minimum, not just a stationary point.
        CHECK(std::abs(sol.theta_deg - grid_optimal_elevation(c.env, c.a_eff)) < 0.05);
    }
}

TEST_CASE("shannon rate") {
    CHECK(shannon_rate_bps(80e6, 1.0) == doctest::Approx(80e6).epsilon(1e-12));
    CHECK(shannon_rate_bps(80e6, 3.0) == doctest::Approx(160e6).epsilon(1e-12));
    CHECK(shannon_rate_bps(80e6, 0.0) == 0.0);
}

TEST_CASE("edge rate reproduces the full link budget") {
    const auto radio = default_radio();
    for (const auto& env : {suburban(), urban()}) {
        for (int k : {1, 4, 7}) {
            for (double d_max : {600.0, 1000.0}) {
                const double cell = geometry::packing_radius(k, d_max);
                const auto sol = optimal_elevation(env, radio.antenna_efficiency);
                const double h = cell * sol.height_ratio;
                const double loss = reference_loss_db(cell, h, env, radio);
                const double noise_dbm =
                    radio.noise_dbm_hz + 10.0 * std::log10(radio.bandwidth_hz);
                const double snr = std::pow(10.0, (radio.tx_power_dbm - loss - noise_dbm) / 10.0);
                const double expect = shannon_rate_bps(radio.bandwidth_hz, snr);
                CHECK(edge_rate_bps(k, d_max, env, radio) ==
                      doctest::Approx(expect).epsilon(1e-9));
            }
        }
    }
    // Frozen spot value for the single-UAV kilometer cell.
    CHECK(edge_rate_bps(1, 1000.0, suburban(), radio) ==
          doctest::Approx(392.5530e6).epsilon(1e-4));
}

TEST_CASE("radio validation") {
    CHECK_NOTHROW(validate_radio(default_radio()));
    RadioParams r = default_radio();
    r.total_bandwidth_hz = 2.0 * r.bandwidth_hz; // breaks the three-cell reuse pattern
    CHECK_THROWS_AS(validate_radio(r), ConfigError);
    r = default_radio();
    r.bandwidth_hz = 0.0;
    CHECK_THROWS_AS(validate_radio(r), ConfigError);
    r = default_radio();
    r.carrier_hz = -1.0;
    CHECK_THROWS_AS(validate_radio(r), ConfigError);
    r = default_radio();
    r.antenna_efficiency = 1.5;
    CHECK_THROWS_AS(validate_radio(r), ConfigError);
}
