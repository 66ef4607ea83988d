#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "rhombus/constraints.hpp"
#include "rhombus/data.hpp"
#include "rhombus/error.hpp"

using namespace rhombus;

namespace {

PointSet unit_square() {
    std::vector<Point> pts{
        {FieldElement::from_int(0), FieldElement::from_int(0)},
        {FieldElement::from_int(1), FieldElement::from_int(0)},
        {FieldElement::from_int(1), FieldElement::from_int(1)},
        {FieldElement::from_int(0), FieldElement::from_int(1)},
    };
    return PointSet::from_points(std::move(pts), "square");
}

PointSet double_triangle() {
    // two unit triangles sharing an edge: a rhombus whose short diagonal is unit
    const Rational half = make_rational(1, 2);
    std::vector<Point> pts{
        {FieldElement::from_int(0), FieldElement::from_int(0)},
        {FieldElement::from_int(1), FieldElement::from_int(0)},
        {FieldElement::from_rational(half), FieldElement{0, half, 0, 0}},
        {FieldElement::from_rational(half), FieldElement{0, -half, 0, 0}},
    };
    return PointSet::from_points(std::move(pts), "double-triangle");
}

// Independent oracle: scan every subset directly against the defining exact
// distances. Only used at test scale.
struct BruteSets {
    std::vector<std::array<int, 3>> c3, t;
    std::vector<std::array<int, 4>> c4;
    std::vector<std::pair<int, int>> eq433;
};

BruteSets brute_force_families(const PointSet& a) {
    const int n = static_cast<int>(a.size());
    const FieldElement unit = to_field(sqdist_unit());
    const FieldElement d433 = to_field(sqdist_433());
    const FieldElement tlong = to_field(sqdist_long_side());
    const auto is_unit = [&](int i, int j) { return a.sqdist(i, j) == unit; };

    BruteSets out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (a.sqdist(i, j) == d433) out.eq433.emplace_back(i, j);
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const int units = is_unit(i, j) + is_unit(i, k) + is_unit(j, k);
                if (units == 3) out.c3.push_back({i, j, k});
                if (units == 2) {
                    // T: two unit sides plus the long side
                    const FieldElement third = !is_unit(i, j)   ? a.sqdist(i, j)
                                               : !is_unit(i, k) ? a.sqdist(i, k)
                                                                : a.sqdist(j, k);
                    if (third == tlong) out.t.push_back({i, j, k});
                }
            }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    const int q[4] = {i, j, k, l};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int x = 0; x < 4; ++x)
                        for (int y = x + 1; y < 4; ++y)
                            if (is_unit(q[x], q[y])) {
                                ++deg[x];
                                ++deg[y];
                                ++edges;
                            }
                    // unit-distance graph equal to the 4-cycle
                    if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2)
                        out.c4.push_back({i, j, k, l});
                }
    return out;
}

}  // namespace

TEST_CASE("unit graph basics") {
    const Graph tri = unit_graph(PointSet::from_points(
        {Point{FieldElement::from_int(0), FieldElement::from_int(0)},
         Point{FieldElement::from_int(1), FieldElement::from_int(0)},
         Point{FieldElement::from_rational(make_rational(1, 2)),
               FieldElement{0, make_rational(1, 2), 0, 0}}},
        "c3"));
    CHECK(tri.edge_count() == 3);  // K3

    // the two anchor points of b46 are not unit-adjacent
    const Graph g46 = unit_graph(bundled_b46());
    CHECK_FALSE(g46.has_edge(0, 1));
}

TEST_CASE("golden hyperedge counts on the bundled sets") {
    // Frozen on the first verified run; any change means the detectors or the
    // data moved.
    const FamilySet all{Family::C3Element, Family::C4Element, Family::TTriple,
                        Family::EqPair433};
    const ForbiddenSets s154 = find_forbidden_sets(bundled_b154(), all);
    CHECK(unit_graph(bundled_b154()).edge_count() == 687);
    CHECK(s154.c3.size() == 326);
    CHECK(s154.c4.size() == 852);
    CHECK(s154.t.size() == 368);
    CHECK(s154.eq433.size() == 2);

    const ForbiddenSets s46 = find_forbidden_sets(bundled_b46(), all);
    CHECK(unit_graph(bundled_b46()).edge_count() == 148);
    CHECK(s46.c3.size() == 56);
    CHECK(s46.c4.size() == 108);
    CHECK(s46.t.size() == 56);
    CHECK(s46.eq433.size() == 1);
    CHECK(s46.eq433[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("unit square yields one c4 element and no triangles") {
    const ForbiddenSets sets =
        find_forbidden_sets(unit_square(), {Family::C3Element, Family::C4Element});
    CHECK(sets.c3.empty());
    REQUIRE(sets.c4.size() == 1);
    CHECK(sets.c4[0] == std::array<int, 4>{0, 1, 2, 3});
}

TEST_CASE("a unit diagonal disqualifies the 4-cycle") {
    const ForbiddenSets sets =
        find_forbidden_sets(double_triangle(), {Family::C3Element, Family::C4Element});
    CHECK(sets.c4.empty());
    CHECK(sets.c3.size() == 2);
}

TEST_CASE("the anchor triple of b154 is detected as a T triple") {
    const ForbiddenSets sets = find_forbidden_sets(bundled_b154(), {Family::TTriple});
    CHECK(std::find(sets.t.begin(), sets.t.end(), std::array<int, 3>{0, 1, 2}) != sets.t.end());
}

TEST_CASE("detector matches the subset-scan oracle on random bundled subsets") {
    std::mt19937_64 rng(23);
    const auto& full = bundled_b154().lattice();
    const FamilySet all{Family::C3Element, Family::C4Element, Family::TTriple,
                        Family::EqPair433};
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<std::size_t> idx(full.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        const std::size_t n = 20 + rng() % 21;  // up to 40 points
        std::vector<LatticePoint> pts;
        for (std::size_t i = 0; i < n; ++i) pts.push_back(full[idx[i]]);
        const PointSet sub = PointSet::from_lattice(std::move(pts), "subset");

        const ForbiddenSets fast = find_forbidden_sets(sub, all);
        const BruteSets slow = brute_force_families(sub);
        CHECK(fast.c3 == slow.c3);
        CHECK(fast.c4 == slow.c4);
        CHECK(fast.t == slow.t);
        CHECK(fast.eq433 == slow.eq433);
    }
}

TEST_CASE("small exact shapes agree with the oracle too") {
    const PointSet square = unit_square();
    const PointSet dtri = double_triangle();
    for (const PointSet* set : {&square, &dtri}) {
        const FamilySet all{Family::C3Element, Family::C4Element, Family::TTriple,
                            Family::EqPair433};
        const ForbiddenSets fast = find_forbidden_sets(*set, all);
        const BruteSets slow = brute_force_families(*set);
        CHECK(fast.c3 == slow.c3);
        CHECK(fast.c4 == slow.c4);
        CHECK(fast.t == slow.t);
        CHECK(fast.eq433 == slow.eq433);
    }
}

TEST_CASE("a float detector with 1e-9 tolerance reports the same hyperedges") {
    // Agreement check only; no proof path reads floats.
    for (const PointSet* set : {&bundled_b154(), &bundled_b46()}) {
        const int n = static_cast<int>(set->size());
        std::vector<std::array<double, 2>> xy;
        for (const auto& p : set->points()) xy.push_back(to_xy(p));
        const auto near = [&](int i, int j, double target_sq) {
            const double dx = xy[i][0] - xy[j][0], dy = xy[i][1] - xy[j][1];
            return std::abs(dx * dx + dy * dy - target_sq) < 1e-9;
        };
        const double tlong_sq = (7.0 + std::sqrt(33.0)) / 6.0;

        Graph ug(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (near(i, j, 1.0)) ug.add_edge(i, j);

        std::vector<std::array<int, 3>> float_c3, float_t;
        for (const auto& t : triangles(ug))
            float_c3.push_back({static_cast<int>(t[0]), static_cast<int>(t[1]),
                                static_cast<int>(t[2])});
        std::vector<std::array<int, 4>> float_c4;
        for (const auto& c : induced_four_cycles(ug)) {
            std::array<int, 4> e{static_cast<int>(c[0]), static_cast<int>(c[1]),
                                 static_cast<int>(c[2]), static_cast<int>(c[3])};
            std::sort(e.begin(), e.end());
            float_c4.push_back(e);
        }
        std::sort(float_c4.begin(), float_c4.end());
        for (int apex = 0; apex < n; ++apex) {
            const auto& nb = ug.neighbors(apex);
            for (std::size_t x = 0; x < nb.size(); ++x)
                for (std::size_t y = x + 1; y < nb.size(); ++y)
                    if (near(static_cast<int>(nb[x]), static_cast<int>(nb[y]), tlong_sq)) {
                        std::array<int, 3> e{apex, static_cast<int>(nb[x]),
                                             static_cast<int>(nb[y])};
                        std::sort(e.begin(), e.end());
                        float_t.push_back(e);
                    }
        }
        std::sort(float_t.begin(), float_t.end());

        const ForbiddenSets exact = find_forbidden_sets(
            *set, {Family::C3Element, Family::C4Element, Family::TTriple});
        CHECK(exact.c3 == float_c3);
        CHECK(exact.c4 == float_c4);
        CHECK(exact.t == float_t);
    }
}

TEST_CASE("detection is deterministic") {
    const FamilySet all{Family::C3Element, Family::C4Element, Family::TTriple,
                        Family::EqPair433};
    const ForbiddenSets a = find_forbidden_sets(bundled_b46(), all);
    const ForbiddenSets b = find_forbidden_sets(bundled_b46(), all);
    CHECK(a.c3 == b.c3);
    CHECK(a.c4 == b.c4);
    CHECK(a.t == b.t);
    CHECK(a.eq433 == b.eq433);
}

TEST_CASE("build_system wires the canonical rule sets") {
    const ConstraintSystem s154 = build_system(bundled_b154(), b154_rules());
    CHECK(s154.var_count == 154);
    CHECK(s154.anchors.size() == 3);
    CHECK(s154.nae_edges.size() == 326 + 852);
    CHECK(s154.eq_edges.empty());

    const ConstraintSystem s46 = build_system(bundled_b46(), b46_rules());
    CHECK(s46.var_count == 46);
    CHECK(s46.anchors.size() == 2);
    CHECK(s46.nae_edges.size() == 56 + 108 + 56);

    Rules square_rules;
    square_rules.forbid_c4 = true;
    square_rules.anchors = {{0, Color::Red}};
    const ConstraintSystem sq = build_system(unit_square(), square_rules);
    CHECK(sq.var_count == 4);
    CHECK(sq.nae_edges.size() == 1);
    CHECK(sq.anchors.size() == 1);
}

TEST_CASE("anchor validation") {
    Rules rules;
    rules.forbid_c4 = true;
    rules.anchors = {{0, Color::Red}, {0, Color::Blue}};
    CHECK_THROWS_AS(build_system(unit_square(), rules), ConflictingAnchorError);

    rules.anchors = {{9, Color::Red}};
    CHECK_THROWS_AS(build_system(unit_square(), rules), IndexRangeError);

    // duplicate anchors with the same color collapse
    rules.anchors = {{0, Color::Red}, {0, Color::Red}};
    CHECK(build_system(unit_square(), rules).anchors.size() == 1);
}

TEST_CASE("rules text round trip") {
    const std::string text =
        "# base rules\nforbid c3\nforbid c4\nequal-dist d433\nanchor 0 red\nanchor 1 blue\n";
    const Rules rules = parse_rules(text);
    CHECK(rules.forbid_c3);
    CHECK(rules.forbid_c4);
    CHECK_FALSE(rules.forbid_t);
    CHECK(rules.equal_dist_433);
    REQUIRE(rules.anchors.size() == 2);
    CHECK(rules.anchors[1] == std::pair<int, Color>{1, Color::Blue});

    const Rules back = parse_rules(format_rules(rules));
    CHECK(back.forbid_c3 == rules.forbid_c3);
    CHECK(back.equal_dist_433 == rules.equal_dist_433);
    CHECK(back.anchors == rules.anchors);

    CHECK_THROWS_AS(parse_rules("forbid c9\n"), ParseError);
    CHECK_THROWS_AS(parse_rules("anchor x red\n"), ParseError);
}
