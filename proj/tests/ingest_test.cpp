#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "swarmgrid/errors.hpp"
#include "swarmgrid/ingest.hpp"

using namespace swarmgrid;
using namespace swarmgrid::ingest;
using swarmgrid::testfix::make_year_csv;

namespace {

HourlyTrace parse_text(const std::string& text, const WeatherHeader& header = {}) {
    std::istringstream in(text);
    return parse_weather_csv(in, "test.csv", header);
}

} // namespace

TEST_CASE("a plain year parses into 8760 aligned hours") {
    const auto trace = parse_text(make_year_csv(2015, 365));
    CHECK(trace.hours() == kYearHours);
    CHECK(trace.timestamps.front() == "20150101:0000");
    CHECK(trace.timestamps.back() == "20151231:2300");
    CHECK(trace.irradiance_wm2[7] == 250.5);
    CHECK(trace.irradiance_wm2[0] == 0.0);
    CHECK(trace.ambient_c[100] == 12.25);
    CHECK(trace.wind_mps[100] == 3.5);
    CHECK(trace.notices.empty());
}

TEST_CASE("column order is free and extra columns are ignored") {
    // Permute the canonical columns and append a junk one.
    std::istringstream lines(make_year_csv(2015, 365));
    std::ostringstream out;
    std::string line;
    bool first = true;
    while (std::getline(lines, line)) {
        if (first) {
            out << "T2m_c,junk,time,WS10m_mps,G_i_wm2\n";
            first = false;
            continue;
        }
        std::istringstream row(line);
        std::string ts, g, t, w;
        std::getline(row, ts, ',');
        std::getline(row, g, ',');
        std::getline(row, t, ',');
        std::getline(row, w, ',');
        out << t << ",x," << ts << ',' << w << ',' << g << '\n';
    }
    const auto trace = parse_text(out.str());
    CHECK(trace.hours() == kYearHours);
    CHECK(trace.irradiance_wm2[8] == 250.5);
    CHECK(trace.wind_mps[8] == 3.5);
}

TEST_CASE("renamed columns parse through the header remap") {
    std::string text = make_year_csv(2015, 365);
    text.replace(0, text.find('\n'), "ts,ghi,temp,wind");
    WeatherHeader remap;
    remap.time = "ts";
    remap.irradiance = "ghi";
    remap.temperature = "temp";
    remap.wind = "wind";
    const auto trace = parse_text(text, remap);
    CHECK(trace.hours() == kYearHours);
}

TEST_CASE("missing columns are named in the error") {
    try {
        parse_text("time,G_i_wm2,T2m_c\n20150101:0000,0,10\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("WS10m_mps") != std::string::npos);
    }
}

TEST_CASE("short years are rejected") {
    std::string text = make_year_csv(2015, 365);
    text.erase(text.rfind("20151231:2300"));
    CHECK_THROWS_AS(parse_text(text), ParseError);
}

TEST_CASE("leap years drop the extra day with a notice") {
    const auto trace = parse_text(make_year_csv(2016, 366));
    CHECK(trace.hours() == kYearHours);
    REQUIRE(trace.notices.size() == 1);
    CHECK(trace.notices.front().find("leap") != std::string::npos);
    for (const auto& ts : trace.timestamps) {
        CHECK(ts.compare(0, 8, "20160229") != 0);
    }
    // The day before and after the dropped block stay adjacent.
    CHECK(trace.timestamps[(31 + 28) * 24 - 1] == "20160228:2300");
    CHECK(trace.timestamps[(31 + 28) * 24] == "20160301:0000");
}

TEST_CASE("malformed rows name the line") {
    auto expect_parse_error = [](const std::string& text, const std::string& needle) {
        try {
            parse_text(text);
            FAIL("expected ParseError for " << needle);
        } catch (const ParseError& e) {
            CAPTURE(e.what());
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    const std::string header = "time,G_i_wm2,T2m_c,WS10m_mps\n";
    // Calendar-invalid stamp.
    expect_parse_error(header + "20151301:0000,0,10,3\n", "test.csv:2");
    // Stride breaks: a repeated hour.
    expect_parse_error(header + "20150101:0000,0,10,3\n20150101:0000,0,10,3\n", "test.csv:3");
    // Minute field must stay constant.
    expect_parse_error(header + "20150101:0000,0,10,3\n20150101:0130,0,10,3\n", "test.csv:3");
    // Negative irradiance and wind.
    expect_parse_error(header + "20150101:0000,-1,10,3\n", "test.csv:2");
    expect_parse_error(header + "20150101:0000,0,10,-3\n", "test.csv:2");
    // Non-numeric cell.
    expect_parse_error(header + "20150101:0000,abc,10,3\n", "test.csv:2");
}

TEST_CASE("gusty hours collapse into one summary notice") {
    const auto text = make_year_csv(2015, 365, [](int d, int h, double&, double&, double& w) {
        if ((d == 100 && h == 12) || (d == 200 && h == 3)) w = 75.0;
    });
    const auto trace = parse_text(text);
    CHECK(trace.hours() == kYearHours);
    REQUIRE(trace.notices.size() == 1);
    CHECK(trace.notices.front().find("2 hour") != std::string::npos);
    CHECK(trace.notices.front().find("75") != std::string::npos);
    // The trace keeps the raw values; flight feasibility is decided later.
    CHECK(trace.wind_mps[100 * 24 + 12] == 75.0);
}

TEST_CASE("serialization round-trips byte for byte") {
    const auto trace = parse_text(make_year_csv(2015, 365, [](int d, int h, double& g, double& t,
                                                              double& w) {
        g = g > 0.0 ? g + 0.125 * ((d * 24 + h) % 7) : 0.0;
        t = 12.25 + 0.1 * (d % 10);
        w = 3.5 + 0.01 * (h % 5);
    }));
    std::ostringstream first;
    write_weather_csv(first, trace);
    std::istringstream back(first.str());
    const auto reparsed = parse_weather_csv(back, "round.csv");
    std::ostringstream second;
    write_weather_csv(second, reparsed);
    CHECK(first.str() == second.str());
    CHECK(reparsed.irradiance_wm2 == trace.irradiance_wm2);
    CHECK(reparsed.ambient_c == trace.ambient_c);
    CHECK(reparsed.wind_mps == trace.wind_mps);
    CHECK(reparsed.timestamps == trace.timestamps);
}

TEST_CASE("traffic profiles parse means and optional samples") {
    std::ostringstream text;
    text << "# area demand, Mbps per square meter\n\n";
    for (int h = 0; h < 24; ++h) {
        text << 1e-5 * (h + 1) << ',' << 1e-5 * (h + 1) * 0.5 << ',' << 1e-5 * (h + 1) * 1.5
             << '\n';
    }
    std::istringstream in(text.str());
    const auto profile = load_traffic_profile(in, "traffic");
    CHECK(profile.has_samples());
    CHECK(profile.lambda_mbps_m2[0] == doctest::Approx(1e-5).epsilon(1e-12));
    CHECK(profile.samples[23].size() == 2);

    std::istringstream short_in("1e-5\n");
    CHECK_THROWS_AS(load_traffic_profile(short_in, "traffic"), ParseError);
    std::ostringstream long_text;
    for (int i = 0; i < 25; ++i) long_text << "1e-5\n";
    std::istringstream long_in(long_text.str());
    CHECK_THROWS_AS(load_traffic_profile(long_in, "traffic"), ParseError);
    std::ostringstream neg_text;
    for (int i = 0; i < 24; ++i) neg_text << (i == 11 ? "-1e-5\n" : "1e-5\n");
    std::istringstream neg_in(neg_text.str());
    CHECK_THROWS_AS(load_traffic_profile(neg_in, "traffic"), ParseError);
}

TEST_CASE("means-only profiles report no samples") {
    std::ostringstream text;
    for (int h = 0; h < 24; ++h) text << "2e-5\n";
    std::istringstream in(text.str());
    CHECK_FALSE(load_traffic_profile(in, "traffic").has_samples());
}

TEST_CASE("lower quantile picks the ceil-rank order statistic") {
    const std::vector<double> ten = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    CHECK(lower_quantile(ten, 0.5) == 5.0);
    CHECK(lower_quantile(ten, 0.9) == 9.0);
    CHECK(lower_quantile(ten, 0.05) == 1.0);
    CHECK(lower_quantile(ten, 0.95) == 10.0);
    const std::vector<double> unsorted = {3, 1, 4, 1, 5};
    CHECK(lower_quantile(unsorted, 0.5) == 3.0);
    CHECK(lower_quantile(unsorted, 0.21) == 1.0);
    CHECK(lower_quantile(unsorted, 0.99) == 5.0);
    CHECK_THROWS(lower_quantile(ten, 0.0));
    CHECK_THROWS(lower_quantile(ten, 1.0));
    CHECK_THROWS(lower_quantile(std::vector<double>{}, 0.5));
}

TEST_CASE("scale models validate their breakpoints") {
    ScaleModel ok;
    ok.level_factor = {{0.5, 1.0}, {0.9, 1.35}, {0.99, 1.6}};
    CHECK_NOTHROW(validate_scale_model(ok));
    CHECK(scale_factor(ok, 0.3) == 1.0);                                  // flat below
    CHECK(scale_factor(ok, 0.995) == 1.6);                                // flat above
    CHECK(scale_factor(ok, 0.7) == doctest::Approx(1.175).epsilon(1e-12)); // interpolated

    ScaleModel bad;
    CHECK_THROWS_AS(validate_scale_model(bad), ConfigError);
    bad.level_factor = {{0.9, 1.0}, {0.5, 1.2}};
    CHECK_THROWS_AS(validate_scale_model(bad), ConfigError);
    bad.level_factor = {{0.5, 1.2}, {0.9, 1.0}};
    CHECK_THROWS_AS(validate_scale_model(bad), ConfigError);
    bad.level_factor = {{0.5, -1.0}};
    CHECK_THROWS_AS(validate_scale_model(bad), ConfigError);
    bad.level_factor = {{1.5, 1.0}};
    CHECK_THROWS_AS(validate_scale_model(bad), ConfigError);
}

TEST_CASE("provisioning replaces means with per-hour quantiles") {
    TrafficProfile profile;
    for (int h = 0; h < 24; ++h) {
        profile.lambda_mbps_m2[h] = 1.0; // overwritten by provisioning
        for (int i = 1; i <= 20; ++i) profile.samples[h].push_back(h + i);
    }
    const auto p50 = provision_quantile(profile, 0.5);
    for (int h = 0; h < 24; ++h) CHECK(p50.lambda_mbps_m2[h] == h + 10.0);

    // Monotone in the level across a fine sweep.
    std::array<double, 24> prev{};
    for (int step = 1; step <= 15; ++step) {
        const auto p = provision_quantile(profile, step / 16.0);
        for (int h = 0; h < 24; ++h) {
            CHECK(p.lambda_mbps_m2[h] >= prev[h]);
            prev[h] = p.lambda_mbps_m2[h];
        }
    }
}

TEST_CASE("provisioning falls back to the scale model") {
    TrafficProfile profile;
    for (int h = 0; h < 24; ++h) profile.lambda_mbps_m2[h] = 2e-5;
    ScaleModel model;
    model.level_factor = {{0.5, 1.0}, {0.9, 1.35}};
    const auto p = provision_quantile(profile, 0.7, &model);
    for (int h = 0; h < 24; ++h) {
        CHECK(p.lambda_mbps_m2[h] == doctest::Approx(2e-5 * 1.175).epsilon(1e-12));
    }
    CHECK_THROWS_AS(provision_quantile(profile, 0.7), ConfigError);
    CHECK_THROWS_AS(provision_quantile(profile, 0.0, &model), std::domain_error);
    CHECK_THROWS_AS(provision_quantile(profile, 1.0, &model), std::domain_error);
}
