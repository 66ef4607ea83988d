#pragma once

#include <array>

#include "rhombus/field.hpp"

namespace rhombus {

/// Exact planar point with coordinates in Q(sqrt3, sqrt11).
struct Point {
    FieldElement x, y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

/// Exact squared Euclidean distance (px-qx)^2 + (py-qy)^2.
FieldElement point_sqdist(const Point& p, const Point& q);

int compare(const Point& a, const Point& b);

struct PointLess {
    bool operator()(const Point& a, const Point& b) const { return compare(a, b) < 0; }
};

/// Advisory float coordinates for rendering and sanity checks only.
std::array<double, 2> to_xy(const Point& p);

}  // namespace rhombus
