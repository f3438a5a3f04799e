#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

// Small text helpers shared by the parsing and report translation units.
// Not installed; the public headers stay free of them.
namespace swarmgrid::detail {

inline std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

inline std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

/// Shortest round-trip decimal form.
inline std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

/// Full-field finite parse; false on junk, partial consumption, inf or nan.
inline bool parse_finite(const std::string& raw, double& out) {
    const std::string s = trimmed(raw);
    if (s.empty()) return false;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc{} && p == e && std::isfinite(out);
}

} // namespace swarmgrid::detail
