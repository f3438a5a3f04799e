#include "swarmgrid/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "swarmgrid/errors.hpp"
#include "swarmgrid/uav_power.hpp"
#include "text_util.hpp"

namespace swarmgrid::ingest {
namespace {

using detail::format_double;
using detail::strip_cr;
using detail::trimmed;

std::vector<std::string> split_csv(const std::string& line) {
    return detail::split(line, ',');
}

std::string at_line(const std::string& name, std::size_t line_no) {
    return name + ":" + std::to_string(line_no);
}

double parse_double_field(const std::string& raw, const std::string& where, const std::string& col) {
    double v = 0.0;
    if (!detail::parse_finite(raw, v)) {
        throw ParseError(where + ": column " + col + ": not a finite number: '" + raw + "'");
    }
    return v;
}

struct Stamp {
    long hour = 0; // hours since the civil epoch
    int minute = 0;
    bool leap_day = false;
};

unsigned parse_digits(const std::string& s, std::size_t pos, std::size_t len) {
    unsigned v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) {
        v = v * 10 + static_cast<unsigned>(s[i] - '0');
    }
    return v;
}

Stamp parse_stamp(const std::string& raw, const std::string& where, const std::string& col) {
    const std::string s = trimmed(raw);
    const auto bad = [&](const std::string& why) {
        return ParseError(where + ": column " + col + ": " + why + ": '" + raw + "'");
    };
    if (s.size() != 13 || s[8] != ':') throw bad("timestamp must be YYYYMMDD:HHMM");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == 8) continue;
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad("timestamp must be YYYYMMDD:HHMM");
    }
    const int year = static_cast<int>(parse_digits(s, 0, 4));
    const unsigned month = parse_digits(s, 4, 2);
    const unsigned day = parse_digits(s, 6, 2);
    const unsigned hh = parse_digits(s, 9, 2);
    const unsigned mm = parse_digits(s, 11, 2);
    const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                          std::chrono::day{day}};
    if (!ymd.ok()) throw bad("invalid calendar date");
    if (hh > 23 || mm > 59) throw bad("invalid time of day");
    Stamp stamp;
    stamp.hour = std::chrono::sys_days{ymd}.time_since_epoch().count() * 24L + static_cast<long>(hh);
    stamp.minute = static_cast<int>(mm);
    stamp.leap_day = month == 2 && day == 29;
    return stamp;
}

} // namespace

HourlyTrace parse_weather_csv(std::istream& in, const std::string& name,
                              const WeatherHeader& header) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(name + ": empty file");
    const auto cols = split_csv(strip_cr(line));
    const auto column_of = [&](const std::string& want) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (trimmed(cols[i]) == want) return i;
        }
        throw ParseError(name + ":1: missing column '" + want + "'");
    };
    const std::size_t c_time = column_of(header.time);
    const std::size_t c_irr = column_of(header.irradiance);
    const std::size_t c_temp = column_of(header.temperature);
    const std::size_t c_wind = column_of(header.wind);

    struct Row {
        std::string ts;
        double g = 0.0, t = 0.0, w = 0.0;
        Stamp stamp;
        std::size_t line_no = 0;
    };
    std::vector<Row> rows;
    rows.reserve(kYearHours + 24);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) throw ParseError(at_line(name, line_no) + ": empty row");
        const auto fields = split_csv(line);
        if (fields.size() != cols.size()) {
            throw ParseError(at_line(name, line_no) + ": expected " + std::to_string(cols.size()) +
                             " columns, got " + std::to_string(fields.size()));
        }
        Row row;
        row.line_no = line_no;
        row.ts = trimmed(fields[c_time]);
        row.stamp = parse_stamp(fields[c_time], at_line(name, line_no), header.time);
        row.g = parse_double_field(fields[c_irr], at_line(name, line_no), header.irradiance);
        row.t = parse_double_field(fields[c_temp], at_line(name, line_no), header.temperature);
        row.w = parse_double_field(fields[c_wind], at_line(name, line_no), header.wind);
        if (row.g < 0.0) {
            throw ParseError(at_line(name, line_no) + ": column " + header.irradiance +
                             ": negative irradiance " + format_double(row.g));
        }
        if (row.w < 0.0) {
            throw ParseError(at_line(name, line_no) + ": column " + header.wind +
                             ": negative wind speed " + format_double(row.w));
        }
        rows.push_back(std::move(row));
    }
    // Stride errors are positionally earlier defects than a bad row count,
    // so they win when a truncated file also has a corrupt stamp.
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].stamp.hour != rows[i - 1].stamp.hour + 1 ||
            rows[i].stamp.minute != rows[0].stamp.minute) {
            throw ParseError(at_line(name, rows[i].line_no) + ": column " + header.time +
                             ": timestamps must advance by exactly one hour");
        }
    }
    const std::size_t leap_hours = kYearHours + 24;
    if (rows.size() != kYearHours && rows.size() != leap_hours) {
        throw ParseError(name + ": expected " + std::to_string(kYearHours) + " rows (or " +
                         std::to_string(leap_hours) + " with a leap day), got " +
                         std::to_string(rows.size()));
    }

    HourlyTrace trace;
    trace.timestamps.reserve(kYearHours);
    trace.irradiance_wm2.reserve(kYearHours);
    trace.ambient_c.reserve(kYearHours);
    trace.wind_mps.reserve(kYearHours);
    std::size_t dropped = 0;
    std::size_t gusty_hours = 0;
    double max_wind = 0.0;
    std::size_t first_gusty_line = 0;
    for (const Row& row : rows) {
        if (rows.size() == leap_hours && row.stamp.leap_day) {
            ++dropped;
            continue;
        }
        if (row.w > uav_power::kMaxHoverWindMps) {
            ++gusty_hours;
            if (row.w > max_wind) max_wind = row.w;
            if (first_gusty_line == 0) first_gusty_line = row.line_no;
        }
        trace.timestamps.push_back(row.ts);
        trace.irradiance_wm2.push_back(row.g);
        trace.ambient_c.push_back(row.t);
        trace.wind_mps.push_back(row.w);
    }
    if (rows.size() == leap_hours) {
        if (dropped != 24) {
            throw ParseError(name + ": " + std::to_string(leap_hours) +
                             " rows require a full Feb 29 day to drop, found " +
                             std::to_string(dropped) + " leap-day rows");
        }
        trace.notices.push_back(name + ": dropped 24 leap-day rows (Feb 29)");
    }
    if (gusty_hours > 0) {
        trace.notices.push_back(name + ": " + std::to_string(gusty_hours) +
                                " hours exceed the " + format_double(uav_power::kMaxHoverWindMps) +
                                " m/s hover wind envelope (max " + format_double(max_wind) +
                                " m/s, line " + std::to_string(first_gusty_line) + ")");
    }
    return trace;
}

HourlyTrace parse_weather_csv(const std::filesystem::path& file, const WeatherHeader& header) {
    std::ifstream in(file);
    if (!in) throw ParseError(file.string() + ": cannot open weather trace");
    return parse_weather_csv(in, file.filename().string(), header);
}

void write_weather_csv(std::ostream& out, const HourlyTrace& trace) {
    const WeatherHeader canonical;
    out << canonical.time << ',' << canonical.irradiance << ',' << canonical.temperature << ','
        << canonical.wind << '\n';
    for (std::size_t h = 0; h < trace.hours(); ++h) {
        out << trace.timestamps[h] << ',' << format_double(trace.irradiance_wm2[h]) << ','
            << format_double(trace.ambient_c[h]) << ',' << format_double(trace.wind_mps[h]) << '\n';
    }
}

bool TrafficProfile::has_samples() const {
    return std::all_of(samples.begin(), samples.end(),
                       [](const std::vector<double>& s) { return !s.empty(); });
}

TrafficProfile load_traffic_profile(std::istream& in, const std::string& name) {
    TrafficProfile profile;
    std::string line;
    std::size_t line_no = 0;
    std::size_t hour = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (trimmed(line).empty()) continue;
        if (hour >= 24) throw ParseError(at_line(name, line_no) + ": more than 24 hour lines");
        const auto fields = split_csv(line);
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const std::string col = i == 0 ? "mean" : "sample " + std::to_string(i);
            const double v = parse_double_field(fields[i], at_line(name, line_no), col);
            if (v < 0.0) {
                throw ParseError(at_line(name, line_no) + ": column " + col +
                                 ": negative traffic density " + format_double(v));
            }
            if (i == 0) {
                profile.lambda_mbps_m2[hour] = v;
            } else {
                profile.samples[hour].push_back(v);
            }
        }
        ++hour;
    }
    if (hour != 24) {
        throw ParseError(name + ": expected 24 hour lines, got " + std::to_string(hour));
    }
    return profile;
}

TrafficProfile load_traffic_profile(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(file.string() + ": cannot open traffic profile");
    return load_traffic_profile(in, file.filename().string());
}

void validate_scale_model(const ScaleModel& model) {
    if (model.level_factor.empty()) throw ConfigError("scale model needs at least one breakpoint");
    double prev_level = -1.0;
    double prev_factor = -1.0;
    for (const auto& [level, factor] : model.level_factor) {
        if (!(level >= 0.0) || !(level <= 1.0)) {
            throw ConfigError("scale model level " + format_double(level) + " outside [0, 1]");
        }
        if (level <= prev_level) throw ConfigError("scale model levels must strictly increase");
        if (!(factor >= 0.0) || factor < prev_factor) {
            throw ConfigError("scale model factors must be non-negative and non-decreasing");
        }
        prev_level = level;
        prev_factor = factor;
    }
}

double scale_factor(const ScaleModel& model, double level) {
    validate_scale_model(model);
    const auto& pts = model.level_factor;
    if (level <= pts.front().first) return pts.front().second;
    if (level >= pts.back().first) return pts.back().second;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (level <= pts[i].first) {
            const auto [l0, f0] = pts[i - 1];
            const auto [l1, f1] = pts[i];
            return f0 + (f1 - f0) * (level - l0) / (l1 - l0);
        }
    }
    return pts.back().second;
}

double lower_quantile(std::span<const double> samples, double level) {
    if (samples.empty()) throw std::domain_error("quantile of an empty sample set");
    if (!(level > 0.0) || !(level < 1.0)) throw std::domain_error("quantile level must lie in (0, 1)");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    // ulp guard keeps exact products like 0.9 * 10 on the mathematical rank.
    auto rank = static_cast<std::size_t>(std::ceil(level * static_cast<double>(sorted.size()) - 1e-9));
    if (rank == 0) rank = 1;
    return sorted[rank - 1];
}

TrafficProfile provision_quantile(const TrafficProfile& profile, double level,
                                  const ScaleModel* scale) {
    if (!(level > 0.0) || !(level < 1.0)) {
        throw std::domain_error("provision level must lie in (0, 1)");
    }
    TrafficProfile out = profile;
    if (profile.has_samples()) {
        for (std::size_t h = 0; h < 24; ++h) {
            out.lambda_mbps_m2[h] = lower_quantile(profile.samples[h], level);
        }
    } else if (scale != nullptr) {
        const double factor = scale_factor(*scale, level);
        for (double& lambda : out.lambda_mbps_m2) lambda *= factor;
    } else {
        throw ConfigError("quantile provisioning needs empirical samples or a scale model");
    }
    return out;
}

} // namespace swarmgrid::ingest
