#include "rhombus/combine.hpp"

#include <map>

#include "rhombus/error.hpp"
#include "rhombus/isometry.hpp"

namespace rhombus {

PointSet combine(const PointSet& a, const PointSet& b, int m) {
    if (m != 2 && m != 3) throw Error("combine: m must be 2 or 3");
    if (b.size() < static_cast<std::size_t>(m))
        throw DegenerateAnchorError("combine: B has fewer than m points");

    const auto& bp = b.points();
    std::vector<Point> anchor(bp.begin(), bp.begin() + m);
    if (m == 2 && anchor[0] == anchor[1])
        throw DegenerateAnchorError("combine: coincident anchor pair in B");
    if (m == 3 && twice_signed_area(anchor[0], anchor[1], anchor[2]).is_zero())
        throw DegenerateAnchorError("combine: collinear anchor triple in B");

    const FieldElement d01 = point_sqdist(anchor[0], anchor[1]);
    const FieldElement d02 = m == 3 ? point_sqdist(anchor[0], anchor[2]) : FieldElement{};
    const FieldElement d12 = m == 3 ? point_sqdist(anchor[1], anchor[2]) : FieldElement{};

    std::vector<Point> out = a.points();
    std::map<Point, bool, PointLess> seen;
    for (const auto& p : out) seen.emplace(p, true);

    const auto place_copies = [&](std::span<const Point> tuple) {
        for (const Isometry& iso : isometries_between(anchor, tuple)) {
            for (const auto& q : bp) {
                Point img = iso.apply(q);
                if (seen.emplace(img, true).second) out.push_back(std::move(img));
            }
        }
    };

    const std::size_t n = a.size();
    const auto& ap = a.points();
    if (m == 2) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || a.sqdist(i, j) != d01) continue;
                const Point tuple[2] = {ap[i], ap[j]};
                place_copies(tuple);
            }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || a.sqdist(i, j) != d01) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    if (a.sqdist(i, k) != d02 || a.sqdist(j, k) != d12) continue;
                    const Point tuple[3] = {ap[i], ap[j], ap[k]};
                    place_copies(tuple);
                }
            }
    }
    return PointSet::from_points(std::move(out), a.label() + "+" + b.label());
}

PointSet unit_triangle_set() {
    const Rational half = make_rational(1, 2);
    std::vector<Point> pts{
        {FieldElement::from_int(0), FieldElement::from_int(0)},
        {FieldElement::from_int(1), FieldElement::from_int(0)},
        {FieldElement::from_rational(half), FieldElement{0, half, 0, 0}},
    };
    return PointSet::from_points(std::move(pts), "c3");
}

PointSet unit_segment_set() {
    std::vector<Point> pts{
        {FieldElement::from_int(0), FieldElement::from_int(0)},
        {FieldElement::from_int(1), FieldElement::from_int(0)},
    };
    return PointSet::from_points(std::move(pts), "segment");
}

}  // namespace rhombus
