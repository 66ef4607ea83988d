#include "rhombus/data.hpp"

namespace rhombus {

namespace {

// 154-point certificate set; anchors are the first three points, an exact
// isosceles 1, 1, (3+sqrt33)/6 triangle.
constexpr const char* kB154Text =
    "[-1, 3, -9, 1]\n"
    "[5, 3, -3, 1]\n"
    "[-1, 1, 1, 1]\n"
    "[-11, 1, 1, -1]\n"
    "[0, 4, -8, 0]\n"
    "[-6, 2, -4, 0]\n"
    "[-5, 3, -3, -1]\n"
    "[-7, 3, -3, 1]\n"
    "[0, 2, -10, 0]\n"
    "[-1, 3, 3, 1]\n"
    "[-7, 1, -5, 1]\n"
    "[-6, 2, -16, 0]\n"
    "[-11, 3, 3, -1]\n"
    "[-6, 0, 6, 0]\n"
    "[5, 1, -5, 1]\n"
    "[-6, 2, 8, 0]\n"
    "[-6, 0, -6, 0]\n"
    "[0, 2, 2, 0]\n"
    "[-7, 3, -15, 1]\n"
    "[-5, 1, 7, -1]\n"
    "[-1, 1, 13, 1]\n"
    "[-1, 1, -11, 1]\n"
    "[-5, 5, -13, -1]\n"
    "[5, 5, -13, 1]\n"
    "[0, 4, 4, 0]\n"
    "[0, 4, -20, 0]\n"
    "[-2, 4, -8, 2]\n"
    "[1, 1, -11, -1]\n"
    "[6, 4, -2, 0]\n"
    "[6, 4, -14, 0]\n"
    "[-5, 3, 9, -1]\n"
    "[-4, 0, -6, -2]\n"
    "[-10, 2, 2, -2]\n"
    "[-5, 3, -15, -1]\n"
    "[-10, 4, -8, -2]\n"
    "[1, 3, -9, -1]\n"
    "[-7, 3, 9, 1]\n"
    "[-2, 2, 2, 2]\n"
    "[-8, 0, -6, 2]\n"
    "[-12, 4, -8, 0]\n"
    "[-13, 3, -9, 1]\n"
    "[0, 2, -22, 0]\n"
    "[5, 3, -15, 1]\n"
    "[6, 2, -4, 0]\n"
    "[6, 2, -16, 0]\n"
    "[-1, -1, -13, 1]\n"
    "[5, 3, 9, 1]\n"
    "[-1, 5, -7, 1]\n"
    "[4, 2, 8, 2]\n"
    "[-1, 3, 15, 1]\n"
    "[4, 4, -2, 2]\n"
    "[-2, 0, 0, 2]\n"
    "[1, 3, 3, -1]\n"
    "[4, 2, -4, 2]\n"
    "[-1, 3, -21, 1]\n"
    "[-1, 5, -19, 1]\n"
    "[4, 4, -14, 2]\n"
    "[-6, 4, -14, 0]\n"
    "[-2, 0, -12, 2]\n"
    "[-13, 1, 1, 1]\n"
    "[-8, 4, -2, 2]\n"
    "[-2, 2, -10, 2]\n"
    "[-7, -1, 5, 1]\n"
    "[-7, 1, -17, 1]\n"
    "[-6, -2, -8, 0]\n"
    "[-13, 1, -11, 1]\n"
    "[-12, 0, 12, 0]\n"
    "[-6, -2, 4, 0]\n"
    "[-7, 1, 19, 1]\n"
    "[-2, 0, 12, 2]\n"
    "[-7, -1, 17, 1]\n"
    "[-12, 2, -22, 0]\n"
    "[-11, 1, -11, -1]\n"
    "[-6, 2, -28, 0]\n"
    "[-6, 4, -26, 0]\n"
    "[-11, 3, -21, -1]\n"
    "[-11, 5, -7, -1]\n"
    "[-11, 1, 13, -1]\n"
    "[-13, 3, 3, 1]\n"
    "[-10, 0, 0, -2]\n"
    "[-17, 3, -3, -1]\n"
    "[-6, 4, -2, 0]\n"
    "[-11, 3, -9, -1]\n"
    "[-1, -1, 11, 1]\n"
    "[-6, 0, 18, 0]\n"
    "[-4, 0, 6, -2]\n"
    "[-8, 0, 6, 2]\n"
    "[11, 1, 1, 1]\n"
    "[5, 1, -17, 1]\n"
    "[10, 2, -10, 2]\n"
    "[5, -1, 5, 1]\n"
    "[10, 0, 0, 2]\n"
    "[-18, 2, -4, 0]\n"
    "[-18, 2, -16, 0]\n"
    "[-10, 2, -10, -2]\n"
    "[-13, 5, -7, 1]\n"
    "[-12, 2, 2, 0]\n"
    "[-12, 0, 0, 0]\n"
    "[10, 2, 2, 2]\n"
    "[10, 4, -8, 2]\n"
    "[11, 3, -9, 1]\n"
    "[11, 3, 3, 1]\n"
    "[-6, 6, -12, 0]\n"
    "[0, 2, 14, 0]\n"
    "[-8, 2, 8, 2]\n"
    "[-6, 2, 20, 0]\n"
    "[4, 0, 6, 2]\n"
    "[0, -2, -2, 0]\n"
    "[-12, 0, -12, 0]\n"
    "[-1, -1, -1, 1]\n"
    "[0, 0, -12, 0]\n"
    "[-6, 0, -18, 0]\n"
    "[6, 2, 8, 0]\n"
    "[1, -1, -1, -1]\n"
    "[-8, 4, -14, 2]\n"
    "[-5, 1, -17, -1]\n"
    "[-12, -2, 10, 0]\n"
    "[-14, 0, 0, 2]\n"
    "[-12, 2, -10, 0]\n"
    "[-5, -1, 17, -1]\n"
    "[1, 1, 1, -1]\n"
    "[-10, 0, 12, -2]\n"
    "[-5, 1, 19, -1]\n"
    "[1, 1, 13, -1]\n"
    "[6, 0, 6, 0]\n"
    "[5, 1, 19, 1]\n"
    "[10, 0, 12, 2]\n"
    "[4, 0, 18, 2]\n"
    "[-1, 1, 25, 1]\n"
    "[-7, 1, 7, 1]\n"
    "[-1, -1, 23, 1]\n"
    "[5, 1, 7, 1]\n"
    "[4, 2, -16, 2]\n"
    "[-1, 1, -23, 1]\n"
    "[4, 0, -6, 2]\n"
    "[-5, -1, 5, -1]\n"
    "[0, 0, 0, 0]\n"
    "[-10, 0, -12, -2]\n"
    "[5, 5, -1, 1]\n"
    "[-2, 2, 14, 2]\n"
    "[-8, 2, -4, 2]\n"
    "[-14, 0, -12, 2]\n"
    "[1, 5, -19, -1]\n"
    "[-2, 2, -22, 2]\n"
    "[5, -1, -7, 1]\n"
    "[-2, -2, 10, 2]\n"
    "[-7, -1, -7, 1]\n"
    "[-12, -2, -2, 0]\n"
    "[-10, 2, -22, -2]\n"
    "[0, -2, 10, 0]\n"
    "[6, 0, -6, 0]\n"
    "[0, 0, 12, 0]\n"
    "[-5, 1, -5, -1]\n"
    "[1, -1, 11, -1]\n";

// 46-point subset; anchors are the first two points, at exact distance
// 4/sqrt3.
constexpr const char* kB46Text =
    "[-4, 0, -6, -2]\n"
    "[-8, 4, -2, 2]\n"
    "[0, 4, -8, 0]\n"
    "[-6, 2, -4, 0]\n"
    "[-5, 3, -3, -1]\n"
    "[-7, 3, -3, 1]\n"
    "[0, 2, -10, 0]\n"
    "[-1, 3, 3, 1]\n"
    "[-1, 3, -9, 1]\n"
    "[-7, 1, -5, 1]\n"
    "[-6, 2, -16, 0]\n"
    "[-11, 3, 3, -1]\n"
    "[-6, 0, 6, 0]\n"
    "[5, 1, -5, 1]\n"
    "[-6, 2, 8, 0]\n"
    "[-1, 1, 1, 1]\n"
    "[-6, 0, -6, 0]\n"
    "[0, 2, 2, 0]\n"
    "[-7, 3, -15, 1]\n"
    "[-5, 1, 7, -1]\n"
    "[-1, 1, -11, 1]\n"
    "[0, 4, 4, 0]\n"
    "[-2, 4, -8, 2]\n"
    "[1, 1, -11, -1]\n"
    "[1, 3, -9, -1]\n"
    "[-7, 3, 9, 1]\n"
    "[-2, 2, 2, 2]\n"
    "[-13, 3, -9, 1]\n"
    "[5, 3, -15, 1]\n"
    "[6, 2, -4, 0]\n"
    "[-1, 3, -21, 1]\n"
    "[-13, 1, 1, 1]\n"
    "[-7, -1, 5, 1]\n"
    "[-13, 3, 3, 1]\n"
    "[-10, 0, 0, -2]\n"
    "[-6, 4, -2, 0]\n"
    "[-12, 0, 0, 0]\n"
    "[-8, 2, 8, 2]\n"
    "[-1, -1, -1, 1]\n"
    "[1, -1, -1, -1]\n"
    "[1, 1, 1, -1]\n"
    "[-7, 1, 7, 1]\n"
    "[-5, -1, 5, -1]\n"
    "[0, 0, 0, 0]\n"
    "[-8, 2, -4, 2]\n"
    "[-5, 1, -5, -1]\n";

}  // namespace

std::string_view bundled_b154_text() { return kB154Text; }
std::string_view bundled_b46_text() { return kB46Text; }

const PointSet& bundled_b154() {
    static const PointSet set = parse_points(kB154Text, PointFormat::Lattice, "b154");
    return set;
}

const PointSet& bundled_b46() {
    static const PointSet set = parse_points(kB46Text, PointFormat::Lattice, "b46");
    return set;
}

}  // namespace rhombus
