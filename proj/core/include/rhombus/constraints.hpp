#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "rhombus/coloring.hpp"
#include "rhombus/graph.hpp"
#include "rhombus/pointset.hpp"

namespace rhombus {

// The four geometric constraint families. Their defining exact squared
// distances are pinned in lattice form: unit = (144,0)/144, the 4/sqrt3
// pair = (768,0)/144, the long triangle side = (168,24)/144.
enum class Family : unsigned {
    C3Element = 1u << 0,   // unit equilateral triangles
    C4Element = 1u << 1,   // unit rhombi with non-unit diagonals
    TTriple = 1u << 2,     // triples with squared-distance multiset {1, 1, (7+sqrt33)/6}
    EqPair433 = 1u << 3,   // pairs at distance 4/sqrt3
};

struct FamilySet {
    unsigned bits = 0;
    FamilySet() = default;
    FamilySet(std::initializer_list<Family> fams) {
        for (Family f : fams) bits |= static_cast<unsigned>(f);
    }
    bool has(Family f) const { return bits & static_cast<unsigned>(f); }
    void add(Family f) { bits |= static_cast<unsigned>(f); }
};

/// Simple graph on the set's indices with an edge iff the exact squared
/// distance is 1.
Graph unit_graph(const PointSet& a);

// Hyperedge lists, indices sorted within each edge, lists in lexicographic
// order. Identical input yields bit-identical output.
struct ForbiddenSets {
    std::vector<std::array<int, 3>> c3;
    std::vector<std::array<int, 4>> c4;
    std::vector<std::array<int, 3>> t;
    std::vector<std::pair<int, int>> eq433;
};

ForbiddenSets find_forbidden_sets(const PointSet& a, FamilySet families);

// Which families become not-all-equal edges, whether 4/sqrt3 pairs become
// equality edges, and the fixed color assignments.
struct Rules {
    bool forbid_c3 = false;
    bool forbid_c4 = false;
    bool forbid_t = false;
    bool equal_dist_433 = false;
    std::vector<std::pair<int, Color>> anchors;

    FamilySet detection_families() const;
};

/// Declarative text form: lines "forbid c3|c4|t", "equal-dist d433",
/// "anchor <index> red|blue"; '#' comments and blank lines ignored.
Rules parse_rules(std::string_view text);
std::string format_rules(const Rules& rules);

// Boolean variables (one per point, true = red), not-all-equal edges,
// equality edges, and anchored assignments.
struct ConstraintSystem {
    int var_count = 0;
    std::vector<std::vector<int>> nae_edges;
    std::vector<std::pair<int, int>> eq_edges;
    std::vector<std::pair<int, Color>> anchors;

    std::size_t clause_count() const {
        return 2 * nae_edges.size() + 2 * eq_edges.size() + anchors.size();
    }
};

/// Compiles the point set under the given rules. Throws ConflictingAnchorError
/// or IndexRangeError on bad anchors.
ConstraintSystem build_system(const PointSet& a, const Rules& rules);

/// Canonical rules for the bundled certificates: the first three points of
/// the 154-point set one color, or the first two of the 46-point set opposite
/// colors.
Rules b154_rules();
Rules b46_rules();

}  // namespace rhombus
