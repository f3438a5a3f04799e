#include "swarmgrid/channel.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "swarmgrid/errors.hpp"
#include "swarmgrid/geometry.hpp"

namespace swarmgrid::channel {
namespace {

// Link-budget convention: the FSPL carrier constant is quoted against the
// rounded propagation speed, so downstream dB figures match published tables.
constexpr double kSpeedOfLight = 3.0e8;
constexpr double kDegToRad = std::numbers::pi / 180.0;
const double kLn10 = std::log(10.0);

void check_theta(double theta_deg, double hi) {
    if (!(theta_deg >= 0.0) || theta_deg > hi) {
        throw std::domain_error("elevation angle out of range: " + std::to_string(theta_deg));
    }
}

void check_a_eff(double a_eff) {
    if (!(a_eff > 0.0) || a_eff > 1.0) {
        throw std::domain_error("antenna efficiency must be in (0, 1], got " + std::to_string(a_eff));
    }
}

} // namespace

Environment suburban() { return {"suburban", 4.88, 0.43, 0.2, 24.0}; }
Environment urban() { return {"urban", 9.61, 0.16, 1.2, 23.0}; }

RadioParams default_radio() { return {}; }

void validate_radio(const RadioParams& radio) {
    if (!(radio.carrier_hz > 0.0) || !(radio.bandwidth_hz > 0.0) || !(radio.total_bandwidth_hz > 0.0)) {
        throw ConfigError("carrier and bandwidths must be positive");
    }
    if (radio.total_bandwidth_hz < 3.0 * radio.bandwidth_hz) {
        throw ConfigError("total bandwidth must be at least 3x the per-UAV bandwidth for the reuse pattern");
    }
    if (!(radio.antenna_efficiency > 0.0) || radio.antenna_efficiency > 1.0) {
        throw ConfigError("antenna efficiency must be in (0, 1], got " +
                          std::to_string(radio.antenna_efficiency));
    }
}

double los_probability(double theta_deg, const Environment& env) {
    check_theta(theta_deg, 90.0);
    return 1.0 / (1.0 + env.a * std::exp(-env.b * (theta_deg - env.a)));
}

double antenna_gain_db(double theta_deg, double a_eff) {
    check_a_eff(a_eff);
    check_theta(theta_deg, 90.0);
    const double s = std::sin(theta_deg * kDegToRad);
    if (theta_deg >= 90.0 || s >= 1.0) {
        throw std::domain_error("ideal conical gain is unbounded at 90 degrees elevation");
    }
    return a_eff * 10.0 * std::log10(2.0 / (1.0 - s));
}

double frequency_constant_db(double carrier_hz) {
    if (!(carrier_hz > 0.0)) throw std::domain_error("carrier frequency must be positive");
    return 20.0 * std::log10(4.0 * std::numbers::pi * carrier_hz / kSpeedOfLight);
}

double path_loss_db(double d_m, double h_m, const Environment& env, const RadioParams& radio) {
    if (!(d_m >= 0.0) || !(h_m >= 0.0) || (d_m == 0.0 && h_m == 0.0)) {
        throw std::domain_error("link geometry needs d > 0 or h > 0");
    }
    const double theta_deg = std::atan2(h_m, d_m) / kDegToRad;
    const double dist = std::hypot(d_m, h_m);
    return los_probability(theta_deg, env) * (env.eta_los_db - env.eta_nlos_db) +
           20.0 * std::log10(dist) + frequency_constant_db(radio.carrier_hz) + env.eta_nlos_db -
           antenna_gain_db(theta_deg, radio.antenna_efficiency);
}

double elevation_residual(double theta_deg, const Environment& env, double a_eff) {
    check_a_eff(a_eff);
    const double tr = theta_deg * kDegToRad;
    const double e = std::exp(-env.b * (theta_deg - env.a));
    const double denom = 1.0 + env.a * e;
    const double slope_term = std::numbers::pi * std::tan(tr) / (9.0 * kLn10);
    const double los_term = env.a * env.b * (env.eta_los_db - env.eta_nlos_db) * e / (denom * denom);
    const double gain_term =
        a_eff * std::numbers::pi * std::cos(tr) / (18.0 * kLn10 * (1.0 - std::sin(tr)));
    return slope_term + los_term - gain_term;
}

ElevationSolution optimal_elevation(const Environment& env, double a_eff) {
    // Memoized: the solve depends only on the four environment constants and
    // the aperture efficiency, and sizing sweeps request it per hour.
    static std::map<std::tuple<double, double, double, double, double>, ElevationSolution> cache;
    static std::mutex cache_mutex;
    const auto key = std::make_tuple(env.a, env.b, env.eta_los_db, env.eta_nlos_db, a_eff);
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    double lo = 0.1;
    double hi = 89.9;
    double flo = elevation_residual(lo, env, a_eff);
    double fhi = elevation_residual(hi, env, a_eff);
    if (!(flo < 0.0) || !(fhi > 0.0)) {
        throw NoInteriorOptimumError("path-loss derivative does not change sign on (0.1, 89.9) deg");
    }
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (elevation_residual(mid, env, a_eff) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double theta = 0.5 * (lo + hi);
    const ElevationSolution sol{theta, std::tan(theta * kDegToRad)};
    std::lock_guard lock(cache_mutex);
    cache.emplace(key, sol);
    return sol;
}

double shannon_rate_bps(double bandwidth_hz, double snr_linear) {
    if (!(bandwidth_hz > 0.0) || !(snr_linear >= 0.0)) {
        throw std::domain_error("bandwidth must be positive and SNR non-negative");
    }
    return bandwidth_hz * std::log2(1.0 + snr_linear);
}

double edge_rate_bps(int k, double d_max_m, const Environment& env, const RadioParams& radio) {
    const double cell = geometry::packing_radius(k, d_max_m);
    const ElevationSolution elev = optimal_elevation(env, radio.antenna_efficiency);
    const double loss_db = path_loss_db(cell, cell * elev.height_ratio, env, radio);
    // Linear units only here: dBm to W, dB to ratio.
    const double tx_w = std::pow(10.0, (radio.tx_power_dbm - 30.0) / 10.0);
    const double noise_w_per_hz = std::pow(10.0, (radio.noise_dbm_hz - 30.0) / 10.0);
    const double loss_linear = std::pow(10.0, loss_db / 10.0);
    const double snr = tx_w / (radio.bandwidth_hz * noise_w_per_hz * loss_linear);
    return shannon_rate_bps(radio.bandwidth_hz, snr);
}

} // namespace swarmgrid::channel
