#pragma once

#include <string>

namespace swarmgrid::channel {

/// Air-to-ground propagation environment: s-curve constants for the
/// line-of-sight probability plus the two excess-loss terms in dB.
struct Environment {
    std::string label;
    double a = 0.0;
    double b = 0.0;
    double eta_los_db = 0.0;
    double eta_nlos_db = 0.0;
};

Environment suburban();
Environment urban();

struct RadioParams {
    double carrier_hz = 5.8e9;
    double bandwidth_hz = 80e6;
    double total_bandwidth_hz = 480e6;
    double noise_dbm_hz = -174.0;
    double tx_power_dbm = 23.0;
    double antenna_efficiency = 0.9;
};

RadioParams default_radio();

/// Throws ConfigError when the parameters cannot support the three-cell
/// frequency reuse pattern (total bandwidth below 3x the per-UAV bandwidth)
/// or contain non-positive frequencies/bandwidths.
void validate_radio(const RadioParams& radio);

/// Line-of-sight probability at elevation angle theta (degrees, 0..90).
double los_probability(double theta_deg, const Environment& env);

/// Conical-beam antenna gain in dB at elevation theta (degrees, < 90).
/// a_eff in (0, 1] scales the aperture term. Throws std::domain_error at
/// theta = 90 where the ideal gain is unbounded.
double antenna_gain_db(double theta_deg, double a_eff);

/// Carrier-dependent free-space constant 20*log10(4*pi*f_c/c) in dB.
double frequency_constant_db(double carrier_hz);

/// Mean air-to-ground path loss in dB between a hover point at height h_m
/// and a ground user at horizontal distance d_m.
double path_loss_db(double d_m, double h_m, const Environment& env, const RadioParams& radio);

struct ElevationSolution {
    double theta_deg = 0.0;
    double height_ratio = 0.0; // tan(theta): hover height per unit horizontal distance
};

/// Derivative of path loss with respect to the elevation angle in degrees,
/// at fixed horizontal distance. Root of this residual is the loss-optimal
/// elevation. Exposed for verification.
double elevation_residual(double theta_deg, const Environment& env, double a_eff);

/// Loss-optimal elevation angle via bracketed bisection of the residual on
/// (0.1, 89.9) degrees. Throws NoInteriorOptimumError when the residual does
/// not change sign on that interval.
ElevationSolution optimal_elevation(const Environment& env, double a_eff);

/// Shannon rate in bit/s for a given linear SNR.
double shannon_rate_bps(double bandwidth_hz, double snr_linear);

/// Worst-case (cell-edge) downlink rate in bit/s for one UAV serving a cell
/// of packing_radius(k, d_max_m) at the loss-optimal elevation.
double edge_rate_bps(int k, double d_max_m, const Environment& env, const RadioParams& radio);

} // namespace swarmgrid::channel
