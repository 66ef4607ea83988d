#include "rhombus/point.hpp"

namespace rhombus {

FieldElement point_sqdist(const Point& p, const Point& q) {
    const FieldElement dx = p.x - q.x;
    const FieldElement dy = p.y - q.y;
    return dx * dx + dy * dy;
}

int compare(const Point& a, const Point& b) {
    if (int c = compare(a.x, b.x); c != 0) return c;
    return compare(a.y, b.y);
}

std::array<double, 2> to_xy(const Point& p) { return {to_double(p.x), to_double(p.y)}; }

}  // namespace rhombus
