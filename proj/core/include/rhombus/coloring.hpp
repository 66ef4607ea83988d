#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rhombus {

enum class Color : std::uint8_t { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

/// One entry per vertex / point / variable.
using Coloring = std::vector<Color>;

inline const char* to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

/// "1" for red, "0" for blue; the compact report encoding.
std::string to_bit_string(const Coloring& col);

}  // namespace rhombus
