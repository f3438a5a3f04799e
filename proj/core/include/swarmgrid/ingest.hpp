#pragma once

#include <array>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace swarmgrid::ingest {

/// Hours in the fixed model horizon (one non-leap year).
inline constexpr std::size_t kYearHours = 8760;

/// One year of hourly site measurements: plane-of-array irradiance, 2 m air
/// temperature, and 10 m wind speed, with the source timestamps preserved.
/// Notices collect non-fatal normalizations (leap-day drop, wind envelope).
struct HourlyTrace {
    std::vector<std::string> timestamps; // YYYYMMDD:HHMM, strictly increasing hourly
    std::vector<double> irradiance_wm2;
    std::vector<double> ambient_c;
    std::vector<double> wind_mps;
    std::vector<std::string> notices;

    [[nodiscard]] std::size_t hours() const { return timestamps.size(); }
};

/// Column names looked up in the weather CSV header. Defaults are the
/// canonical export names; remap them to ingest differently labelled files.
struct WeatherHeader {
    std::string time = "time";
    std::string irradiance = "G_i_wm2";
    std::string temperature = "T2m_c";
    std::string wind = "WS10m_mps";
};

/// Parses an hourly weather CSV. Accepts 8760 rows, or 8784 rows from a leap
/// year whose Feb 29 block is dropped with a notice. Throws ParseError naming
/// the line and column on malformed input, wrong columns, non-monotone
/// timestamps, or negative irradiance/wind.
HourlyTrace parse_weather_csv(std::istream& in, const std::string& name,
                              const WeatherHeader& header = {});
HourlyTrace parse_weather_csv(const std::filesystem::path& file,
                              const WeatherHeader& header = {});

/// Writes the canonical format: canonical header, one row per hour, floats in
/// shortest round-trip form. Parsing the output reproduces the trace and
/// re-serializing is byte-identical.
void write_weather_csv(std::ostream& out, const HourlyTrace& trace);

/// Daily-cycle area traffic demand in Mbps/m^2, optionally with empirical
/// samples per hour for quantile provisioning.
struct TrafficProfile {
    std::array<double, 24> lambda_mbps_m2{};
    std::array<std::vector<double>, 24> samples{};

    /// True when every hour carries at least one empirical sample.
    [[nodiscard]] bool has_samples() const;
};

/// Parses a traffic profile: exactly 24 value lines "mean[,sample...]", all
/// non-negative. Blank lines and #-comments are ignored.
TrafficProfile load_traffic_profile(std::istream& in, const std::string& name);
TrafficProfile load_traffic_profile(const std::filesystem::path& file);

/// Provisioning fallback when a profile has no samples: factor applied to
/// the mean as a piecewise-linear function of the level, flat beyond the
/// first/last breakpoint. Levels must increase and factors be non-negative
/// and non-decreasing so provisioning stays monotone in the level.
struct ScaleModel {
    std::vector<std::pair<double, double>> level_factor;
};

/// Throws ConfigError when the breakpoints violate the ScaleModel contract.
void validate_scale_model(const ScaleModel& model);

/// Factor at the given level, linearly interpolated.
double scale_factor(const ScaleModel& model, double level);

/// Lower empirical quantile: sorted sample at index ceil(level * n) - 1.
/// Requires a non-empty sample set and level in (0, 1).
double lower_quantile(std::span<const double> samples, double level);

/// Replaces each hour's mean with the level-quantile of its samples, or with
/// the scale-model-factored mean when the profile has no samples. Throws
/// ConfigError when neither source is available. Monotone in level.
TrafficProfile provision_quantile(const TrafficProfile& profile, double level,
                                  const ScaleModel* scale = nullptr);

} // namespace swarmgrid::ingest
