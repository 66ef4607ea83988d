#include "rhombus/isometry.hpp"

#include "rhombus/error.hpp"

namespace rhombus {

bool congruent_tuples(std::span<const Point> a, std::span<const Point> b) {
    if (a.size() != b.size())
        throw LengthMismatchError("congruent_tuples: sizes " + std::to_string(a.size()) +
                                  " vs " + std::to_string(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (point_sqdist(a[i], a[j]) != point_sqdist(b[i], b[j])) return false;
    return true;
}

Point Isometry::apply(const Point& p) const {
    return {m00 * p.x + m01 * p.y + translation.x, m10 * p.x + m11 * p.y + translation.y};
}

FieldElement twice_signed_area(const Point& p, const Point& q, const Point& r) {
    const FieldElement ux = q.x - p.x, uy = q.y - p.y;
    const FieldElement vx = r.x - p.x, vy = r.y - p.y;
    return ux * vy - uy * vx;
}

namespace {

void check_orthogonal(const Isometry& iso) {
    const FieldElement one = FieldElement::from_int(1);
    if (iso.m00 * iso.m00 + iso.m10 * iso.m10 != one ||
        iso.m01 * iso.m01 + iso.m11 * iso.m11 != one ||
        !(iso.m00 * iso.m01 + iso.m10 * iso.m11).is_zero())
        throw Error("isometry linear part is not exactly orthogonal");
    const FieldElement det = iso.m00 * iso.m11 - iso.m01 * iso.m10;
    if (det != (iso.reflected ? FieldElement::from_int(-1) : one))
        throw Error("isometry determinant does not match orientation flag");
}

// Both isometries taking the segment (s0, s1) onto (d0, d1). The solve
// divides only by the anchor squared length, which lies in the field.
std::vector<Isometry> pair_isometries(const Point& s0, const Point& s1, const Point& d0,
                                      const Point& d1) {
    const FieldElement ux = s1.x - s0.x, uy = s1.y - s0.y;
    const FieldElement vx = d1.x - d0.x, vy = d1.y - d0.y;
    const FieldElement len2 = ux * ux + uy * uy;
    if (len2.is_zero()) throw DegenerateAnchorError("coincident anchor pair");
    const FieldElement inv_len2 = inverse(len2);

    Isometry rot;
    rot.m00 = (ux * vx + uy * vy) * inv_len2;   // cos
    rot.m10 = (ux * vy - uy * vx) * inv_len2;   // sin
    rot.m01 = -rot.m10;
    rot.m11 = rot.m00;
    rot.translation = {d0.x - (rot.m00 * s0.x + rot.m01 * s0.y),
                       d0.y - (rot.m10 * s0.x + rot.m11 * s0.y)};
    rot.reflected = false;

    Isometry ref;
    ref.m00 = (ux * vx - uy * vy) * inv_len2;
    ref.m01 = (uy * vx + ux * vy) * inv_len2;
    ref.m10 = ref.m01;
    ref.m11 = -ref.m00;
    ref.translation = {d0.x - (ref.m00 * s0.x + ref.m01 * s0.y),
                       d0.y - (ref.m10 * s0.x + ref.m11 * s0.y)};
    ref.reflected = true;

    check_orthogonal(rot);
    check_orthogonal(ref);
    return {rot, ref};
}

}  // namespace

std::vector<Isometry> isometries_between(std::span<const Point> src, std::span<const Point> dst) {
    if (src.size() != dst.size())
        throw LengthMismatchError("isometries_between: tuple sizes differ");
    if (src.size() != 2 && src.size() != 3)
        throw Error("isometries_between supports anchors of size 2 or 3");
    if (src.size() == 2) {
        if (src[0] == src[1]) throw DegenerateAnchorError("coincident anchor pair");
        if (!congruent_tuples(src, dst))
            throw NonCongruentError("anchor tuples are not congruent");
        return pair_isometries(src[0], src[1], dst[0], dst[1]);
    }
    if (twice_signed_area(src[0], src[1], src[2]).is_zero())
        throw DegenerateAnchorError("collinear anchor triple");
    if (!congruent_tuples(src, dst)) throw NonCongruentError("anchor tuples are not congruent");
    // The third point distinguishes the direct candidate from the reflected one.
    std::vector<Isometry> out;
    for (const Isometry& iso : pair_isometries(src[0], src[1], dst[0], dst[1]))
        if (iso.apply(src[2]) == dst[2]) out.push_back(iso);
    if (out.size() != 1)
        throw Error("expected exactly one isometry for a non-collinear triple, found " +
                    std::to_string(out.size()));
    return out;
}

}  // namespace rhombus
