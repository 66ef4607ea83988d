#pragma once

#include "rhombus/point.hpp"
#include "rhombus/rational.hpp"

namespace rhombus {

// Integer quadruple [a,b,c,d] encoding the planar point
//   (1/12) * (sqrt3*a + sqrt11*b,  c + sqrt33*d).
// All bundled certificate data lives on this lattice, where squared distances
// are exactly computable with integer arithmetic alone.
struct LatticePoint {
    BigInt a, b, c, d;

    friend bool operator==(const LatticePoint& p, const LatticePoint& q) {
        return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
    }
    friend bool operator!=(const LatticePoint& p, const LatticePoint& q) { return !(p == q); }
};

// Exact squared distance between two lattice points: (s + t*sqrt33) / 144.
struct SqDist {
    BigInt s, t;

    friend bool operator==(const SqDist& u, const SqDist& v) { return u.s == v.s && u.t == v.t; }
    friend bool operator!=(const SqDist& u, const SqDist& v) { return !(u == v); }
};

// The three distances the constraint families are built from, as integer pairs:
// unit distance, the 4/sqrt3 equal-color distance, and the squared long side
// (7 + sqrt33)/6 of the isosceles 1,1,(3+sqrt33)/6 triangle.
inline const SqDist& sqdist_unit() {
    static const SqDist v{144, 0};
    return v;
}
inline const SqDist& sqdist_433() {
    static const SqDist v{768, 0};
    return v;
}
inline const SqDist& sqdist_long_side() {
    static const SqDist v{168, 24};
    return v;
}

/// s = 3*da^2 + 11*db^2 + dc^2 + 33*dd^2, t = 2*(da*db + dc*dd). Pure integers.
SqDist lattice_sqdist(const LatticePoint& p, const LatticePoint& q);

/// The exact field point ((a*sqrt3 + b*sqrt11)/12, (c + d*sqrt33)/12).
Point lift_lattice(const LatticePoint& p);

/// (s + t*sqrt33)/144 as a field element, comparable with point_sqdist output.
FieldElement to_field(const SqDist& d);

/// Advisory float value of (s + t*sqrt33)/144.
double to_double(const SqDist& d);

/// Advisory float coordinates of a lattice point.
std::array<double, 2> to_xy(const LatticePoint& p);

int compare(const LatticePoint& p, const LatticePoint& q);

}  // namespace rhombus
