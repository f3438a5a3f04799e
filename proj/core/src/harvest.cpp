#include "swarmgrid/harvest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "swarmgrid/errors.hpp"

namespace swarmgrid::harvest {
namespace {

constexpr double kBoltzmann = 1.380649e-23;  // J/K
constexpr double kElectronCharge = 1.602176634e-19; // C
constexpr double kCelsiusToKelvin = 273.15;

void check_pv_inputs(double g_wm2, int n_pv) {
    if (!(g_wm2 >= 0.0)) throw std::domain_error("irradiance must be non-negative");
    if (n_pv < 0) throw std::domain_error("panel count must be non-negative");
}

double thermal_voltage(double t_cell_c, const PvParams& pv) {
    return pv.cell_count * kBoltzmann * pv.diode_ideality * (t_cell_c + kCelsiusToKelvin) /
           kElectronCharge;
}

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

void validate_curve(const TurbineCurve& c, const std::string& name) {
    if (c.points.empty()) throw ParseError(name + ": power curve has no breakpoints");
    if (!(c.cut_in_mps >= 0.0) || !(c.cut_out_mps > c.cut_in_mps)) {
        throw ParseError(name + ": cut_out must exceed cut_in");
    }
    if (!(c.rated_power_w > 0.0)) throw ParseError(name + ": rated_power must be positive");
    double prev = -1.0;
    for (const auto& [v, p] : c.points) {
        if (!(v > prev)) throw ParseError(name + ": breakpoint winds must be strictly increasing");
        if (!(p >= 0.0)) throw ParseError(name + ": breakpoint powers must be non-negative");
        if (p > 1.1 * c.rated_power_w) {
            throw ParseError(name + ": breakpoint power exceeds 1.1x rated_power");
        }
        prev = v;
    }
    if (c.points.front().first < c.cut_in_mps) {
        throw ParseError(name + ": first breakpoint lies below cut_in");
    }
}

} // namespace

PvParams default_pv() { return {}; }

double pv_cell_temperature_c(double g_wm2, double t_ambient_c, const PvParams& pv) {
    if (!(g_wm2 >= 0.0)) throw std::domain_error("irradiance must be non-negative");
    return t_ambient_c + (pv.t_cell_noc_c - pv.t_ambient_noc_c) / pv.g_noc_wm2 * g_wm2;
}

double pv_reference_cell_temperature_c(const PvParams& pv) {
    return pv_cell_temperature_c(pv.g_st_wm2, pv.t_ambient_st_c, pv);
}

double pv_power_w(double g_wm2, double t_ambient_c, int n_pv, const PvParams& pv, bool* clamped) {
    check_pv_inputs(g_wm2, n_pv);
    if (clamped) *clamped = false;
    if (g_wm2 == 0.0 || n_pv == 0) return 0.0;

    const double t_cell = pv_cell_temperature_c(g_wm2, t_ambient_c, pv);
    const double t_ref = pv_reference_cell_temperature_c(pv);
    const double dt = t_cell - t_ref;

    const double v_m = pv.v_m_st * (1.0 + pv.beta_pct_per_c / 100.0 * dt) +
                       thermal_voltage(t_cell, pv) * std::log(g_wm2 / pv.g_st_wm2);
    const double ratio = pv.ratio_model == IrradianceRatio::physical ? g_wm2 / pv.g_st_wm2
                                                                     : pv.g_st_wm2 / g_wm2;
    const double i_m = pv.i_m_st * ratio + pv.alpha_pct_per_c / 100.0 * pv.i_m_st * dt;

    // The linearized MPP model leaves its valid region when either operating
    // coordinate goes negative; the product can still come out positive there,
    // so clamp on the intermediates rather than on the final power.
    if (v_m <= 0.0 || i_m <= 0.0) {
        if (clamped) *clamped = true;
        return 0.0;
    }
    return n_pv * v_m * i_m * pv.conversion_efficiency * pv.mppt_efficiency;
}

TurbineCurve default_w500() {
    TurbineCurve c;
    c.kind = "W500";
    c.cut_in_mps = 3.0;
    c.cut_out_mps = 25.0;
    c.rated_power_w = 500.0;
    c.unit_cost = Money::from_cents(142995);
    c.points = {{3.0, 10.0}, {4.0, 35.0},  {5.0, 70.0},  {6.0, 120.0}, {7.0, 190.0},
                {8.0, 270.0}, {9.0, 380.0}, {10.0, 500.0}, {11.0, 540.0}, {12.0, 550.0}};
    return c;
}

TurbineCurve default_w1000() {
    TurbineCurve c;
    c.kind = "W1000";
    c.cut_in_mps = 3.0;
    c.cut_out_mps = 25.0;
    c.rated_power_w = 1000.0;
    c.unit_cost = Money::from_cents(273876);
    c.points = {{3.0, 25.0},  {4.0, 70.0},  {5.0, 140.0},  {6.0, 250.0},  {7.0, 400.0},
                {8.0, 580.0}, {9.0, 780.0}, {10.0, 1000.0}, {11.0, 1080.0}, {12.0, 1100.0}};
    return c;
}

TurbineCurve load_turbine_curve(std::istream& in, const std::string& name) {
    TurbineCurve c;
    c.kind = name;
    bool saw_header = false;
    bool saw_cut_in = false, saw_cut_out = false, saw_rated = false, saw_cost = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trimmed(line);
        if (t.empty() || t.front() == '#') continue;
        if (!saw_header) {
            if (const auto eq = t.find('='); eq != std::string::npos) {
                const std::string key = trimmed(t.substr(0, eq));
                const std::string val = trimmed(t.substr(eq + 1));
                try {
                    if (key == "cut_in") {
                        c.cut_in_mps = std::stod(val);
                        saw_cut_in = true;
                    } else if (key == "cut_out") {
                        c.cut_out_mps = std::stod(val);
                        saw_cut_out = true;
                    } else if (key == "rated_power") {
                        c.rated_power_w = std::stod(val);
                        saw_rated = true;
                    } else if (key == "unit_cost_eur") {
                        c.unit_cost = Money::from_eur(std::stod(val));
                        saw_cost = true;
                    } else {
                        throw ParseError(name + " line " + std::to_string(line_no) +
                                         ": unknown key '" + key + "'");
                    }
                } catch (const std::invalid_argument&) {
                    throw ParseError(name + " line " + std::to_string(line_no) +
                                     ": bad number for '" + key + "'");
                }
                continue;
            }
            if (t == "wind_mps,power_w") {
                saw_header = true;
                continue;
            }
            throw ParseError(name + " line " + std::to_string(line_no) +
                             ": expected key = value or the wind_mps,power_w header");
        }
        std::istringstream row(t);
        std::string a, b, extra;
        if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || std::getline(row, extra) ||
            trimmed(a).empty() || trimmed(b).empty()) {
            throw ParseError(name + " line " + std::to_string(line_no) + ": expected wind,power");
        }
        try {
            c.points.emplace_back(std::stod(trimmed(a)), std::stod(trimmed(b)));
        } catch (const std::invalid_argument&) {
            throw ParseError(name + " line " + std::to_string(line_no) + ": bad number");
        }
    }
    if (!saw_header) throw ParseError(name + ": missing wind_mps,power_w table");
    if (!saw_cut_in || !saw_cut_out || !saw_rated || !saw_cost) {
        throw ParseError(name + ": header must set cut_in, cut_out, rated_power, unit_cost_eur");
    }
    validate_curve(c, name);
    return c;
}

TurbineCurve load_turbine_curve(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open turbine curve file " + file.string());
    return load_turbine_curve(in, file.filename().string());
}

double turbine_power_w(double v_mps, const TurbineCurve& curve) {
    if (!(v_mps >= 0.0)) throw std::domain_error("wind speed must be non-negative");
    if (v_mps < curve.cut_in_mps || v_mps > curve.cut_out_mps) return 0.0;
    const auto& pts = curve.points;
    if (v_mps >= pts.back().first) return pts.back().second;
    double x0 = curve.cut_in_mps;
    double y0 = 0.0;
    for (const auto& [x1, y1] : pts) {
        if (v_mps <= x1) {
            if (x1 == x0) return y1;
            return y0 + (y1 - y0) * (v_mps - x0) / (x1 - x0);
        }
        x0 = x1;
        y0 = y1;
    }
    return pts.back().second;
}

double farm_power_w(double v_mps, int n_w500, int n_w1000, const TurbineCurve& w500,
                    const TurbineCurve& w1000) {
    if (n_w500 < 0 || n_w1000 < 0) throw std::domain_error("turbine counts must be non-negative");
    return n_w500 * turbine_power_w(v_mps, w500) + n_w1000 * turbine_power_w(v_mps, w1000);
}

} // namespace swarmgrid::harvest
