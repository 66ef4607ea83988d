#pragma once

#include <span>
#include <vector>

#include "rhombus/point.hpp"

namespace rhombus {

/// True iff all corresponding exact squared distances agree:
/// point_sqdist(a_i, a_j) == point_sqdist(b_i, b_j) for every i < j.
/// Throws LengthMismatchError when the tuples differ in size.
bool congruent_tuples(std::span<const Point> a, std::span<const Point> b);

// Rigid motion of the plane with entries in Q(sqrt3, sqrt11). The linear part
// is exactly orthogonal; determinant +1 (direct) or -1 (reflected).
struct Isometry {
    FieldElement m00, m01, m10, m11;
    Point translation;
    bool reflected = false;

    Point apply(const Point& p) const;
};

/// Isometries mapping src onto dst pointwise. For a 2-tuple anchor returns
/// exactly two (direct then reflected); for a non-collinear 3-tuple exactly
/// one. Throws DegenerateAnchorError for a coincident pair or collinear
/// triple, NonCongruentError when the tuples do not match.
std::vector<Isometry> isometries_between(std::span<const Point> src, std::span<const Point> dst);

/// Twice the signed area of a triple; exactly zero iff collinear.
FieldElement twice_signed_area(const Point& p, const Point& q, const Point& r);

}  // namespace rhombus
