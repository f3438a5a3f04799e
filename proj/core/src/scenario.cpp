#include "swarmgrid/scenario.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>

#include "swarmgrid/errors.hpp"
#include "text_util.hpp"

namespace swarmgrid::scenario {
namespace {

namespace fs = std::filesystem;
using detail::format_double;
using detail::strip_cr;
using detail::trimmed;

double parse_num(const std::string& value, const std::string& ctx) {
    double v = 0.0;
    if (!detail::parse_finite(value, v)) {
        throw ParseError(ctx + ": expected a finite number, got '" + value + "'");
    }
    return v;
}

double parse_num_or_inf(const std::string& value, const std::string& ctx) {
    const std::string v = trimmed(value);
    if (v == "inf" || v == "infinity") return std::numeric_limits<double>::infinity();
    return parse_num(value, ctx);
}

int parse_count(const std::string& value, const std::string& ctx) {
    const std::string s = trimmed(value);
    int v = 0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (s.empty() || ec != std::errc{} || p != e) {
        throw ParseError(ctx + ": expected an integer, got '" + value + "'");
    }
    return v;
}

Money parse_money(const std::string& value, const std::string& ctx) {
    return Money::from_eur(parse_num(value, ctx));
}

fs::path parse_path(const std::string& value, const fs::path& base_dir) {
    fs::path p(trimmed(value));
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    return p;
}

ingest::ScaleModel parse_scale_model(const std::string& value, const std::string& ctx) {
    ingest::ScaleModel model;
    for (const std::string& part : detail::split(value, ',')) {
        const auto pair = detail::split(part, ':');
        if (pair.size() != 2) {
            throw ParseError(ctx + ": scale model entries are level:factor, got '" + part + "'");
        }
        model.level_factor.emplace_back(parse_num(pair[0], ctx), parse_num(pair[1], ctx));
    }
    return model;
}

std::string serialize_scale_model(const ingest::ScaleModel& model) {
    std::string out;
    for (const auto& [level, factor] : model.level_factor) {
        if (!out.empty()) out += ',';
        out += format_double(level) + ":" + format_double(factor);
    }
    return out;
}

void apply_key(Scenario& s, const std::string& section, const std::string& key,
               const std::string& value, const std::string& ctx, const fs::path& base_dir) {
    const auto unknown = [&] {
        return ParseError(ctx + ": unknown key '" + section + "." + key + "'");
    };
    if (section == "files") {
        if (key == "weather") s.weather_csv = parse_path(value, base_dir);
        else if (key == "traffic") s.traffic_profile = parse_path(value, base_dir);
        else if (key == "w500_curve") s.w500_curve = parse_path(value, base_dir);
        else if (key == "w1000_curve") s.w1000_curve = parse_path(value, base_dir);
        else throw unknown();
    } else if (section == "site") {
        if (key == "environment") {
            const std::string v = trimmed(value);
            if (v != "suburban" && v != "urban") {
                throw ParseError(ctx + ": environment is suburban or urban, got '" + v + "'");
            }
            s.environment = v;
        }
        else if (key == "reference_height_m") s.wind.reference_height_m = parse_num(value, ctx);
        else if (key == "shear_exponent") s.wind.shear_exponent = parse_num(value, ctx);
        else throw unknown();
    } else if (section == "radio") {
        if (key == "carrier_hz") s.radio.carrier_hz = parse_num(value, ctx);
        else if (key == "bandwidth_hz") s.radio.bandwidth_hz = parse_num(value, ctx);
        else if (key == "total_bandwidth_hz") s.radio.total_bandwidth_hz = parse_num(value, ctx);
        else if (key == "noise_dbm_hz") s.radio.noise_dbm_hz = parse_num(value, ctx);
        else if (key == "tx_power_dbm") s.radio.tx_power_dbm = parse_num(value, ctx);
        else if (key == "antenna_efficiency") s.radio.antenna_efficiency = parse_num(value, ctx);
        else throw unknown();
    } else if (section == "airframe") {
        if (key == "weight_n") s.airframe.weight_n = parse_num(value, ctx);
        else if (key == "rotor_count") s.airframe.rotor_count = parse_count(value, ctx);
        else if (key == "tip_speed_mps") s.airframe.tip_speed_mps = parse_num(value, ctx);
        else if (key == "fuselage_area_m2") s.airframe.fuselage_area_m2 = parse_num(value, ctx);
        else if (key == "fuselage_drag_coeff") s.airframe.fuselage_drag_coeff = parse_num(value, ctx);
        else if (key == "rotor_area_m2") s.airframe.rotor_area_m2 = parse_num(value, ctx);
        else if (key == "profile_drag_coeff") s.airframe.profile_drag_coeff = parse_num(value, ctx);
        else if (key == "rotor_solidity") s.airframe.rotor_solidity = parse_num(value, ctx);
        else if (key == "climb_speed_mps") s.airframe.climb_speed_mps = parse_num(value, ctx);
        else if (key == "cruise_speed_mps") s.airframe.cruise_speed_mps = parse_num(value, ctx);
        else if (key == "flight_duration_h") s.airframe.flight_duration_h = parse_num(value, ctx);
        else if (key == "density_model") {
            const std::string v = trimmed(value);
            if (v == "absolute") s.airframe.density_model = uav_power::DensityModel::absolute;
            else if (v == "paper_relative")
                s.airframe.density_model = uav_power::DensityModel::paper_relative;
            else throw ParseError(ctx + ": density_model is absolute or paper_relative");
        } else throw unknown();
    } else if (section == "storage") {
        if (key == "cell_capacity_wh") s.cell.cell_capacity_wh = parse_num(value, ctx);
        else if (key == "conversion_efficiency") s.cell.conversion_efficiency = parse_num(value, ctx);
        else if (key == "uav_battery_wh") s.charger.uav_battery_wh = parse_num(value, ctx);
        else if (key == "charge_power_w") s.charger.charge_power_w = parse_num(value, ctx);
        else throw unknown();
    } else if (section == "prices") {
        if (key == "pv_eur") s.prices.pv = parse_money(value, ctx);
        else if (key == "w500_eur") s.prices.w500 = parse_money(value, ctx);
        else if (key == "w1000_eur") s.prices.w1000 = parse_money(value, ctx);
        else if (key == "cell_eur") s.prices.cell = parse_money(value, ctx);
        else if (key == "uav_eur") s.prices.uav = parse_money(value, ctx);
        else if (key == "budget_eur") s.budget = parse_money(value, ctx);
        else throw unknown();
    } else if (section == "search") {
        if (key == "d_lb_m") s.d_lb_m = parse_num(value, ctx);
        else if (key == "d_ub_m") s.d_ub_m = parse_num_or_inf(value, ctx);
        else if (key == "step_m") s.step_m = parse_num(value, ctx);
        else throw unknown();
    } else if (section == "provision") {
        if (key == "level") s.provision_level = parse_num(value, ctx);
        else if (key == "scale_model") s.scale_model = parse_scale_model(value, ctx);
        else throw unknown();
    } else {
        throw ParseError(ctx + ": unknown section '" + section + "'");
    }
}

} // namespace

Scenario parse_scenario(std::istream& in, const std::string& name,
                        const std::filesystem::path& base_dir) {
    Scenario s;
    std::string line;
    std::string section;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        for (const char marker : {'#', ';'}) {
            if (auto pos = line.find(marker); pos != std::string::npos) line.resize(pos);
        }
        line = trimmed(line);
        if (line.empty()) continue;
        const std::string ctx = name + ":" + std::to_string(line_no);
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(ctx + ": unterminated section header");
            section = trimmed(line.substr(1, line.size() - 2));
            static const std::array<std::string_view, 8> known = {
                "files", "site", "radio", "airframe", "storage", "prices", "search", "provision"};
            if (std::find(known.begin(), known.end(), section) == known.end()) {
                throw ParseError(ctx + ": unknown section '" + section + "'");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(ctx + ": expected key = value");
        const std::string key = trimmed(line.substr(0, eq));
        const std::string value = trimmed(line.substr(eq + 1));
        if (key.empty()) throw ParseError(ctx + ": empty key");
        if (section.empty()) throw ParseError(ctx + ": key outside any [section]");
        apply_key(s, section, key, value, ctx, base_dir);
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(file.string() + ": cannot open scenario");
    return parse_scenario(in, file.filename().string(), file.parent_path());
}

std::vector<Finding> validate_scenario(const Scenario& s) {
    std::vector<Finding> findings;
    const auto error = [&](const std::string& m) { findings.push_back({"error", m}); };
    const auto warn = [&](const std::string& m) { findings.push_back({"warning", m}); };

    if (s.environment != "suburban" && s.environment != "urban") {
        error("environment must be suburban or urban, got '" + s.environment + "'");
    }
    try {
        channel::validate_radio(s.radio);
    } catch (const ConfigError& e) {
        error(e.what());
    }
    const auto& af = s.airframe;
    if (!(af.weight_n > 0.0) || !(af.tip_speed_mps > 0.0) || !(af.rotor_area_m2 > 0.0) ||
        !(af.rotor_solidity > 0.0) || !(af.profile_drag_coeff > 0.0) || af.rotor_count < 1 ||
        af.fuselage_area_m2 < 0.0 || af.fuselage_drag_coeff < 0.0) {
        error("airframe constants must be positive (fuselage terms may be zero)");
    }
    if (!(af.climb_speed_mps > 0.0) || !(af.cruise_speed_mps > 0.0) ||
        !(af.flight_duration_h > 0.0)) {
        error("airframe speeds and flight duration must be positive");
    }
    if (!(s.wind.reference_height_m > 0.0) || s.wind.shear_exponent < 0.0) {
        error("wind reference height must be positive, shear exponent non-negative");
    }
    if (!(s.cell.cell_capacity_wh > 0.0) || !(s.cell.conversion_efficiency > 0.0) ||
        s.cell.conversion_efficiency > 1.0) {
        error("storage cell needs positive capacity and efficiency in (0, 1]");
    }
    if (!(s.charger.uav_battery_wh > 0.0) || !(s.charger.charge_power_w > 0.0)) {
        error("charger ratings must be positive");
    }
    if (s.prices.pv.cents() <= 0 || s.prices.w500.cents() <= 0 || s.prices.w1000.cents() <= 0 ||
        s.prices.cell.cents() <= 0 || s.prices.uav.cents() <= 0) {
        error("all unit prices must be positive");
    }
    if (s.budget.cents() < 0) error("budget must be non-negative");
    if (!(s.step_m > 0.0)) error("search step must be positive");
    if (s.d_lb_m < 0.0) error("search lower bound must be non-negative");
    if (std::isnan(s.d_ub_m) || s.d_ub_m < s.d_lb_m) error("search upper bound must be >= lower bound");
    if (s.provision_level != 0.0 && !(s.provision_level > 0.0 && s.provision_level < 1.0)) {
        error("provision level must be 0 (off) or inside (0, 1)");
    }
    if (!s.scale_model.level_factor.empty()) {
        try {
            ingest::validate_scale_model(s.scale_model);
        } catch (const ConfigError& e) {
            error(e.what());
        }
    }

    const auto check_file = [&](const std::filesystem::path& p, const std::string& what,
                                bool required) {
        if (p.empty()) {
            if (required) warn(what + " path not set (required for size and sweep runs)");
            return;
        }
        if (!std::filesystem::exists(p)) error(what + " file not found: " + p.string());
    };
    check_file(s.weather_csv, "weather trace", true);
    check_file(s.traffic_profile, "traffic profile", true);
    check_file(s.w500_curve, "w500 power curve", false);
    check_file(s.w1000_curve, "w1000 power curve", false);

    // Deep checks: parse whatever is present so format problems surface here.
    if (!s.weather_csv.empty() && std::filesystem::exists(s.weather_csv)) {
        try {
            const auto trace = ingest::parse_weather_csv(s.weather_csv);
            for (const std::string& n : trace.notices) warn(n);
        } catch (const ParseError& e) {
            error(e.what());
        }
    }
    if (!s.traffic_profile.empty() && std::filesystem::exists(s.traffic_profile)) {
        try {
            const auto traffic = ingest::load_traffic_profile(s.traffic_profile);
            if (s.provision_level > 0.0 && !traffic.has_samples() &&
                s.scale_model.level_factor.empty()) {
                error("provision level set but the profile has no samples and no scale model");
            }
        } catch (const ParseError& e) {
            error(e.what());
        }
    }
    for (const auto& [path, what] :
         {std::pair(s.w500_curve, "w500"), std::pair(s.w1000_curve, "w1000")}) {
        if (path.empty() || !std::filesystem::exists(path)) continue;
        try {
            harvest::load_turbine_curve(path);
        } catch (const ParseError& e) {
            error(e.what());
        }
    }
    return findings;
}

std::vector<std::pair<std::string, std::string>> resolved_parameters(const Scenario& s) {
    std::vector<std::pair<std::string, std::string>> p;
    const auto add = [&](const std::string& key, const std::string& value) {
        p.emplace_back(key, value);
    };
    const auto num = [&](const std::string& key, double v) { add(key, format_double(v)); };
    const auto eur = [&](const std::string& key, Money m) { num(key, m.eur()); };
    add("files.weather", s.weather_csv.string());
    add("files.traffic", s.traffic_profile.string());
    add("files.w500_curve", s.w500_curve.string());
    add("files.w1000_curve", s.w1000_curve.string());
    add("site.environment", s.environment);
    num("site.reference_height_m", s.wind.reference_height_m);
    num("site.shear_exponent", s.wind.shear_exponent);
    num("radio.carrier_hz", s.radio.carrier_hz);
    num("radio.bandwidth_hz", s.radio.bandwidth_hz);
    num("radio.total_bandwidth_hz", s.radio.total_bandwidth_hz);
    num("radio.noise_dbm_hz", s.radio.noise_dbm_hz);
    num("radio.tx_power_dbm", s.radio.tx_power_dbm);
    num("radio.antenna_efficiency", s.radio.antenna_efficiency);
    num("airframe.weight_n", s.airframe.weight_n);
    add("airframe.rotor_count", std::to_string(s.airframe.rotor_count));
    num("airframe.tip_speed_mps", s.airframe.tip_speed_mps);
    num("airframe.fuselage_area_m2", s.airframe.fuselage_area_m2);
    num("airframe.fuselage_drag_coeff", s.airframe.fuselage_drag_coeff);
    num("airframe.rotor_area_m2", s.airframe.rotor_area_m2);
    num("airframe.profile_drag_coeff", s.airframe.profile_drag_coeff);
    num("airframe.rotor_solidity", s.airframe.rotor_solidity);
    num("airframe.climb_speed_mps", s.airframe.climb_speed_mps);
    num("airframe.cruise_speed_mps", s.airframe.cruise_speed_mps);
    num("airframe.flight_duration_h", s.airframe.flight_duration_h);
    add("airframe.density_model",
        s.airframe.density_model == uav_power::DensityModel::absolute ? "absolute"
                                                                      : "paper_relative");
    num("storage.cell_capacity_wh", s.cell.cell_capacity_wh);
    num("storage.conversion_efficiency", s.cell.conversion_efficiency);
    num("storage.uav_battery_wh", s.charger.uav_battery_wh);
    num("storage.charge_power_w", s.charger.charge_power_w);
    eur("prices.pv_eur", s.prices.pv);
    eur("prices.w500_eur", s.prices.w500);
    eur("prices.w1000_eur", s.prices.w1000);
    eur("prices.cell_eur", s.prices.cell);
    eur("prices.uav_eur", s.prices.uav);
    eur("prices.budget_eur", s.budget);
    num("search.d_lb_m", s.d_lb_m);
    num("search.d_ub_m", s.d_ub_m);
    num("search.step_m", s.step_m);
    num("provision.level", s.provision_level);
    add("provision.scale_model", serialize_scale_model(s.scale_model));
    return p;
}

sizing::SizingInputs resolve_inputs(const Scenario& s) {
    if (s.weather_csv.empty()) throw ConfigError("scenario does not name a weather trace");
    if (s.traffic_profile.empty()) throw ConfigError("scenario does not name a traffic profile");
    if (s.environment != "suburban" && s.environment != "urban") {
        throw ConfigError("environment must be suburban or urban, got '" + s.environment + "'");
    }
    sizing::SizingInputs in;
    in.trace = ingest::parse_weather_csv(s.weather_csv);
    in.traffic = ingest::load_traffic_profile(s.traffic_profile);
    if (s.provision_level > 0.0) {
        const ingest::ScaleModel* scale =
            s.scale_model.level_factor.empty() ? nullptr : &s.scale_model;
        in.traffic = ingest::provision_quantile(in.traffic, s.provision_level, scale);
    }
    in.env = s.environment == "urban" ? channel::urban() : channel::suburban();
    in.radio = s.radio;
    in.airframe = s.airframe;
    in.wind = s.wind;
    in.pv = s.pv;
    in.w500 = s.w500_curve.empty() ? harvest::default_w500() : harvest::load_turbine_curve(s.w500_curve);
    in.w1000 =
        s.w1000_curve.empty() ? harvest::default_w1000() : harvest::load_turbine_curve(s.w1000_curve);
    in.cell = s.cell;
    in.cell.cell_count = 0;
    in.prices = s.prices;
    return in;
}

} // namespace swarmgrid::scenario
