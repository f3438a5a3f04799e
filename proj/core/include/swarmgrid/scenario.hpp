#pragma once

#include <filesystem>
#include <istream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "swarmgrid/channel.hpp"
#include "swarmgrid/harvest.hpp"
#include "swarmgrid/ingest.hpp"
#include "swarmgrid/money.hpp"
#include "swarmgrid/sizing.hpp"
#include "swarmgrid/storage.hpp"
#include "swarmgrid/uav_power.hpp"

namespace swarmgrid::scenario {

/// A fully resolved run configuration: built-in reference defaults overlaid
/// by an optional scenario file, then by command-line overrides. Relative
/// file paths are anchored at the scenario file's directory.
struct Scenario {
    std::filesystem::path weather_csv;
    std::filesystem::path traffic_profile;
    std::filesystem::path w500_curve;  // empty: built-in curve
    std::filesystem::path w1000_curve; // empty: built-in curve
    std::string environment = "suburban";
    channel::RadioParams radio;
    uav_power::AirframeParams airframe;
    uav_power::WindContext wind;
    harvest::PvParams pv;
    storage::GroundBattery cell;     // prototype; cell_count stays 0
    storage::ChargerSpec charger;
    sizing::CostTable prices;
    Money budget = Money::from_cents(10'000'000);
    double d_lb_m = 0.0;
    double d_ub_m = std::numeric_limits<double>::infinity();
    double step_m = 1.0;
    double provision_level = 0.0; // 0: use the mean traffic profile
    ingest::ScaleModel scale_model; // empty: no provisioning fallback
};

/// Parses the keyed scenario format: [section] headers over key = value
/// lines, # and ; comments. Unknown sections or keys are errors. base_dir
/// anchors relative paths.
Scenario parse_scenario(std::istream& in, const std::string& name,
                        const std::filesystem::path& base_dir);
Scenario load_scenario(const std::filesystem::path& file);

/// One validation finding; severity is "error" or "warning".
struct Finding {
    std::string severity;
    std::string message;
};

/// Range, file-existence, and consistency checks. Collects findings instead
/// of throwing; an empty error set means the scenario can run.
std::vector<Finding> validate_scenario(const Scenario& s);

/// The resolved parameter set as ordered (section.key, value) pairs, values
/// in canonical shortest-round-trip text. Used by the validate echo and
/// embedded verbatim in reports.
std::vector<std::pair<std::string, std::string>> resolved_parameters(const Scenario& s);

/// Loads the referenced data files and assembles the sizing inputs,
/// applying quantile provisioning when a level is set. Throws ParseError or
/// ConfigError on unusable inputs.
sizing::SizingInputs resolve_inputs(const Scenario& s);

} // namespace swarmgrid::scenario
