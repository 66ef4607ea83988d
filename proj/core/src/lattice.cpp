#include "rhombus/lattice.hpp"

#include <cassert>
#include <cmath>

namespace rhombus {

SqDist lattice_sqdist(const LatticePoint& p, const LatticePoint& q) {
    const BigInt da = p.a - q.a;
    const BigInt db = p.b - q.b;
    const BigInt dc = p.c - q.c;
    const BigInt dd = p.d - q.d;
    SqDist r;
    r.s = 3 * da * da + 11 * db * db + dc * dc + 33 * dd * dd;
    r.t = 2 * (da * db + dc * dd);
    // A squared distance is nonnegative; the float check is advisory only.
    assert(r.s.get_d() + r.t.get_d() * std::sqrt(33.0) >= 0.0);
    return r;
}

Point lift_lattice(const LatticePoint& p) {
    Point r;
    r.x = FieldElement{0, make_rational(p.a, 12), make_rational(p.b, 12), 0};
    r.y = FieldElement{make_rational(p.c, 12), 0, 0, make_rational(p.d, 12)};
    return r;
}

FieldElement to_field(const SqDist& d) {
    return {make_rational(d.s, 144), 0, 0, make_rational(d.t, 144)};
}

double to_double(const SqDist& d) {
    return (d.s.get_d() + d.t.get_d() * std::sqrt(33.0)) / 144.0;
}

std::array<double, 2> to_xy(const LatticePoint& p) {
    return {(p.a.get_d() * std::sqrt(3.0) + p.b.get_d() * std::sqrt(11.0)) / 12.0,
            (p.c.get_d() + p.d.get_d() * std::sqrt(33.0)) / 12.0};
}

int compare(const LatticePoint& p, const LatticePoint& q) {
    if (int c = cmp(p.a, q.a); c != 0) return c;
    if (int c = cmp(p.b, q.b); c != 0) return c;
    if (int c = cmp(p.c, q.c); c != 0) return c;
    return cmp(p.d, q.d);
}

}  // namespace rhombus
