#pragma once

// Shared synthetic inputs for the test suites: calendar-correct weather
// years, flat or shaped traffic, and fully wired sizing inputs.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "swarmgrid/sizing.hpp"

namespace swarmgrid::testfix {

inline std::string stamp(std::chrono::sys_days day, int hour) {
    const std::chrono::year_month_day ymd(day);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d%02u%02u:%02d00", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()), hour);
    return buf;
}

using CellHook = std::function<void(int day, int hour, double& g, double& t, double& w)>;

inline std::string make_year_csv(int year, int days, const CellHook& hook = nullptr) {
    std::ostringstream out;
    out << "time,G_i_wm2,T2m_c,WS10m_mps\n";
    const std::chrono::sys_days d0{std::chrono::year(year) / 1 / 1};
    for (int d = 0; d < days; ++d) {
        for (int h = 0; h < 24; ++h) {
            double g = (h >= 7 && h <= 17) ? 250.5 : 0.0;
            double t = 12.25;
            double w = 3.5;
            if (hook) hook(d, h, g, t, w);
            out << stamp(d0 + std::chrono::days(d), h) << ',' << g << ',' << t << ',' << w
                << '\n';
        }
    }
    return out.str();
}

inline ingest::HourlyTrace make_trace(int hours, double g_peak, double wind_mps) {
    ingest::HourlyTrace t;
    const std::chrono::sys_days d0{std::chrono::year(2015) / 1 / 1};
    for (int h = 0; h < hours; ++h) {
        t.timestamps.push_back(stamp(d0 + std::chrono::days(h / 24), h % 24));
        const int hod = h % 24;
        const double g =
            (hod >= 7 && hod <= 17) ? g_peak * std::sin(std::numbers::pi * (hod - 6) / 12.0) : 0.0;
        t.irradiance_wm2.push_back(g);
        t.ambient_c.push_back(15.0);
        t.wind_mps.push_back(wind_mps);
    }
    return t;
}

inline ingest::TrafficProfile flat_traffic(double lambda) {
    ingest::TrafficProfile p;
    p.lambda_mbps_m2.fill(lambda);
    return p;
}

inline sizing::SizingInputs make_inputs(int hours, double lambda, double g_peak,
                                        double wind_mps) {
    sizing::SizingInputs in;
    in.traffic = flat_traffic(lambda);
    in.trace = make_trace(hours, g_peak, wind_mps);
    in.env = channel::suburban();
    in.radio = channel::default_radio();
    in.airframe = uav_power::default_airframe();
    in.pv = harvest::default_pv();
    in.w500 = harvest::default_w500();
    in.w1000 = harvest::default_w1000();
    return in;
}

} // namespace swarmgrid::testfix
