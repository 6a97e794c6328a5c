#pragma once

#include <string>
#include <string_view>

namespace ionmirror {

// Unit convention: hbar = 1 and every stored frequency is an *angular*
// frequency in rad/us, so times are in us and propagators are exp(-i H t).
// Quoted frequency strings are read as angular magnitudes: "1 MHz" means
// 1 rad/us = 1e6 rad/s, "150 kHz" means 0.15 rad/us. This is the reading
// under which a 0.15 rad/us coupling gives a pi-pulse of ~20.9 us.

namespace units {

inline constexpr double hbar_si = 1.054571817e-34;        // J s
inline constexpr double amu_kg = 1.66053906660e-27;       // kg
inline constexpr double beryllium9_mass_kg = 9.0121831 * amu_kg;

/// rad/us -> rad/s
inline constexpr double to_rad_per_s(double w) { return w * 1e6; }

} // namespace units

/// Parse "<number> <unit>" with unit in {Hz, kHz, MHz, GHz, THz} to rad/us.
/// The unit is mandatory; anything else throws ConfigError.
double parse_angular_frequency(std::string_view text);

/// Parse "<number> <unit>" with unit in {s, ms, us, ns} to us.
double parse_duration(std::string_view text);

/// Render a rad/us value back into the quoted-frequency convention, e.g.
/// 0.15 -> "150 kHz". Used for report annotations only.
std::string format_frequency(double rad_per_us);

} // namespace ionmirror
