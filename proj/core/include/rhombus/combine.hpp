#pragma once

#include "rhombus/pointset.hpp"

namespace rhombus {

/// The combinator A (+)_m B: the union of A with every congruent copy of B
/// anchored on each ordered m-tuple of A congruent to B's first m points.
/// Output order is deterministic: A's points first, then new points in scan
/// order (tuple index order, direct isometry before reflected, B's order).
/// m must be 2 or 3 and B's anchor non-degenerate.
PointSet combine(const PointSet& a, const PointSet& b, int m);

/// The unit equilateral triangle (0,0), (1,0), (1/2, sqrt3/2) as an exact set.
PointSet unit_triangle_set();

/// The unit segment (0,0), (1,0).
PointSet unit_segment_set();

}  // namespace rhombus
