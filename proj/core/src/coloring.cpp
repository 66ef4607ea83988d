#include "rhombus/coloring.hpp"

namespace rhombus {

std::string to_bit_string(const Coloring& col) {
    std::string s;
    s.reserve(col.size());
    for (Color c : col) s.push_back(c == Color::Red ? '1' : '0');
    return s;
}

}  // namespace rhombus
