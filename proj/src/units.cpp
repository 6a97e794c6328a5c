#include "ionmirror/units.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include "ionmirror/errors.hpp"

namespace ionmirror {

namespace {

// value and unit token; accepts "3 MHz", "3MHz", "  0.15 kHz "
std::pair<double, std::string> split_value_unit(std::string_view text)
{
    std::string s(text);
    const char* begin = s.c_str();
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (end == begin)
        throw ConfigError("cannot parse number from '" + s + "'");
    std::string unit;
    for (const char* p = end; *p; ++p)
        if (!std::isspace(static_cast<unsigned char>(*p))) unit.push_back(*p);
    if (unit.empty())
        throw ConfigError("missing unit in '" + s + "' (dimensioned values need one)");
    return {value, unit};
}

} // namespace

double parse_angular_frequency(std::string_view text)
{
    static const std::map<std::string, double> scale = {
        {"Hz", 1e-6}, {"kHz", 1e-3}, {"MHz", 1.0}, {"GHz", 1e3}, {"THz", 1e6},
    };
    auto [value, unit] = split_value_unit(text);
    auto it = scale.find(unit);
    if (it == scale.end())
        throw ConfigError("unknown frequency unit '" + unit + "' in '" + std::string(text) + "'");
    return value * it->second;
}

double parse_duration(std::string_view text)
{
    static const std::map<std::string, double> scale = {
        {"s", 1e6}, {"ms", 1e3}, {"us", 1.0}, {"ns", 1e-3},
    };
    auto [value, unit] = split_value_unit(text);
    auto it = scale.find(unit);
    if (it == scale.end())
        throw ConfigError("unknown time unit '" + unit + "' in '" + std::string(text) + "'");
    return value * it->second;
}

std::string format_frequency(double rad_per_us)
{
    double mag = std::abs(rad_per_us);
    const char* unit = "MHz";
    double scaled = rad_per_us;
    if (mag != 0.0 && mag < 1e-3) {
        unit = "Hz";
        scaled = rad_per_us * 1e6;
    } else if (mag < 1.0) {
        unit = "kHz";
        scaled = rad_per_us * 1e3;
    } else if (mag >= 1e6) {
        unit = "THz";
        scaled = rad_per_us * 1e-6;
    } else if (mag >= 1e3) {
        unit = "GHz";
        scaled = rad_per_us * 1e-3;
    }
    std::ostringstream out;
    out << scaled << ' ' << unit;
    return out.str();
}

} // namespace ionmirror
