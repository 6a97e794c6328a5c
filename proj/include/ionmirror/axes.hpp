#pragma once

#include <array>

namespace ionmirror {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAllAxes{Axis::X, Axis::Y, Axis::Z};

constexpr int axis_index(Axis a) { return static_cast<int>(a); }

constexpr const char* axis_name(Axis a)
{
    switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
    }
    return "?";
}

} // namespace ionmirror
