#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "swarmgrid/money.hpp"

namespace swarmgrid::harvest {

enum class IrradianceRatio {
    physical,      // current scales with G / G_ST
    paper_literal, // inverted G_ST / G form, for comparison runs
};

/// Photovoltaic panel model constants. Temperature coefficients are relative
/// percentages per degC applied to the rated maximum-power-point values.
struct PvParams {
    double alpha_pct_per_c = 0.0474;  // current coefficient
    double beta_pct_per_c = -0.285;   // voltage coefficient
    int cell_count = 60;
    double diode_ideality = 1.5;
    double v_m_st = 31.8; // V at standard test conditions
    double i_m_st = 8.85; // A at standard test conditions
    double g_st_wm2 = 1000.0;
    double g_noc_wm2 = 800.0;
    double t_ambient_noc_c = 20.0;
    double t_cell_noc_c = 45.0;
    double t_ambient_st_c = 25.0;
    double conversion_efficiency = 0.95;
    double mppt_efficiency = 0.95;
    Money unit_cost = Money::from_cents(20200);
    IrradianceRatio ratio_model = IrradianceRatio::physical;
};

PvParams default_pv();

/// Cell temperature (degC) under irradiance g_wm2 and ambient t_ambient_c,
/// from the nominal-operating-conditions linear model.
double pv_cell_temperature_c(double g_wm2, double t_ambient_c, const PvParams& pv);

/// Reference cell temperature: the cell temperature reached at standard test
/// irradiance and ambient (56.25 degC for the default panel).
double pv_reference_cell_temperature_c(const PvParams& pv);

/// DC output power (W) of n_pv panels after converter and MPPT losses.
/// Returns 0 at zero irradiance. A negative model intermediate (extreme
/// inputs) clamps to 0 and sets *clamped when provided.
double pv_power_w(double g_wm2, double t_ambient_c, int n_pv, const PvParams& pv,
                  bool* clamped = nullptr);

/// Factory power curve of one turbine kind, sampled as (wind m/s, power W)
/// breakpoints with cut-in/cut-out limits.
struct TurbineCurve {
    std::string kind;
    std::vector<std::pair<double, double>> points;
    double cut_in_mps = 0.0;
    double cut_out_mps = 0.0;
    double rated_power_w = 0.0;
    Money unit_cost;
};

/// Built-in approximations of the two supported turbine classes. These are
/// plausible small-turbine shapes, not manufacturer data; site studies
/// should load measured curves from files.
TurbineCurve default_w500();
TurbineCurve default_w1000();

/// Parses a turbine curve file: a keyed header block (cut_in, cut_out,
/// rated_power, unit_cost_eur), then a `wind_mps,power_w` CSV table with
/// strictly increasing wind. Throws ParseError naming the offending line.
TurbineCurve load_turbine_curve(std::istream& in, const std::string& name);
TurbineCurve load_turbine_curve(const std::filesystem::path& file);

/// Interpolated output (W) at wind speed v_mps: zero below cut-in and above
/// cut-out, linear between breakpoints, flat beyond the last breakpoint.
double turbine_power_w(double v_mps, const TurbineCurve& curve);

/// Combined output (W) of a farm of n_w500 + n_w1000 turbines.
double farm_power_w(double v_mps, int n_w500, int n_w1000, const TurbineCurve& w500,
                    const TurbineCurve& w1000);

} // namespace swarmgrid::harvest
