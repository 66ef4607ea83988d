#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "rhombus/audit.hpp"
#include "rhombus/data.hpp"
#include "rhombus/error.hpp"
#include "rhombus/gadget.hpp"
#include "rhombus/solver.hpp"

using namespace rhombus;

namespace {

ConstraintSystem empty_system(int vars) {
    ConstraintSystem sys;
    sys.var_count = vars;
    return sys;
}

PointSet random_b154_subset(std::mt19937_64& rng, std::size_t n) {
    const auto& full = bundled_b154().lattice();
    std::vector<std::size_t> idx(full.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(full[idx[i]]);
    return PointSet::from_lattice(std::move(pts), "subset");
}

Rules random_rules(std::mt19937_64& rng, int n) {
    Rules rules;
    do {
        rules.forbid_c3 = rng() & 1;
        rules.forbid_c4 = rng() & 1;
        rules.forbid_t = rng() & 1;
    } while (!rules.forbid_c3 && !rules.forbid_c4 && !rules.forbid_t);
    rules.equal_dist_433 = rng() & 1;
    const int anchor_count = static_cast<int>(rng() % 3);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < anchor_count; ++i) {
        const int idx = pick(rng);
        const Color color = (rng() & 1) ? Color::Red : Color::Blue;
        bool clash = false;
        for (const auto& [j, c] : rules.anchors)
            if (j == idx && c != color) clash = true;
        if (!clash) rules.anchors.emplace_back(idx, color);
    }
    return rules;
}

}  // namespace

TEST_CASE("empty system is satisfiable with any coloring") {
    const Verdict v = solve(empty_system(5));
    CHECK(v.status == Status::Sat);
    REQUIRE(v.witness);
    CHECK(v.witness->size() == 5);
    CHECK(verify_coloring(empty_system(5), Coloring(5, Color::Red)).empty());
}

TEST_CASE("a single nae edge admits exactly the bichromatic assignments") {
    ConstraintSystem sys = empty_system(2);
    sys.nae_edges.push_back({0, 1});
    const Verdict v = solve(sys);
    REQUIRE(v.status == Status::Sat);
    CHECK((*v.witness)[0] != (*v.witness)[1]);

    int models = 0;
    for (int mask = 0; mask < 4; ++mask) {
        const Coloring col{mask & 1 ? Color::Red : Color::Blue,
                           mask & 2 ? Color::Red : Color::Blue};
        if (verify_coloring(sys, col).empty()) ++models;
    }
    CHECK(models == 2);
}

TEST_CASE("equality edges and anchors propagate") {
    ConstraintSystem sys = empty_system(3);
    sys.eq_edges = {{0, 1}, {1, 2}};
    sys.anchors = {{0, Color::Blue}};
    const Verdict v = solve(sys);
    REQUIRE(v.status == Status::Sat);
    CHECK(*v.witness == Coloring(3, Color::Blue));

    // chained equalities plus a nae edge over the chain: unsatisfiable
    sys.nae_edges.push_back({0, 2});
    CHECK(solve(sys).status == Status::Unsat);
}

TEST_CASE("contradictory anchor units are unsatisfiable") {
    ConstraintSystem sys = empty_system(2);
    sys.anchors = {{0, Color::Red}, {0, Color::Blue}};
    CHECK(solve(sys).status == Status::Unsat);
    CHECK(brute_force(sys).status == Status::Unsat);
}

TEST_CASE("the gadget system is unsatisfiable by search and by enumeration") {
    const ConstraintSystem sys = gadget_system(build_b7());
    CHECK(sys.var_count == 7);
    CHECK(sys.nae_edges.size() == 1);
    CHECK(sys.eq_edges.size() == 6);

    const Verdict by_search = solve(sys);
    const Verdict by_enumeration = brute_force(sys);
    CHECK(by_search.status == Status::Unsat);
    CHECK(by_enumeration.status == Status::Unsat);
    CHECK(by_enumeration.stats.assignments_examined == 128);  // exactly 2^7
}

TEST_CASE("bundled certificates are unsatisfiable") {
    CHECK(solve(build_system(bundled_b154(), b154_rules())).status == Status::Unsat);
    CHECK(solve(build_system(bundled_b46(), b46_rules())).status == Status::Unsat);
}

TEST_CASE("solve agrees with brute force on randomized subsystems") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 8 + rng() % 13;  // up to 20 points
        const PointSet sub = random_b154_subset(rng, n);
        const ConstraintSystem sys = build_system(sub, random_rules(rng, static_cast<int>(n)));
        const Verdict fast = solve(sys);
        const Verdict slow = brute_force(sys);
        REQUIRE(fast.status == slow.status);
        if (slow.witness) CHECK(verify_coloring(sys, *slow.witness).empty());
    }
}

TEST_CASE("adding hyperedges never turns unsat into sat") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 10 + rng() % 8;
        ConstraintSystem sys = empty_system(static_cast<int>(n));
        bool was_unsat = false;
        for (int step = 0; step < 24; ++step) {
            std::vector<int> edge;
            const int arity = 2 + static_cast<int>(rng() % 3);
            while (static_cast<int>(edge.size()) < arity) {
                const int v = static_cast<int>(rng() % n);
                if (std::find(edge.begin(), edge.end(), v) == edge.end()) edge.push_back(v);
            }
            std::sort(edge.begin(), edge.end());
            sys.nae_edges.push_back(std::move(edge));
            const bool unsat = solve(sys).status == Status::Unsat;
            if (was_unsat) CHECK(unsat);
            was_unsat = unsat;
        }
    }
}

TEST_CASE("verify_coloring lists every broken constraint") {
    ConstraintSystem sys = empty_system(4);
    sys.nae_edges.push_back({0, 1, 2, 3});
    const auto violations = verify_coloring(sys, Coloring(4, Color::Red));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == Violation::Kind::MonochromaticSet);

    // all-red on the full 154-point system: every nae edge is monochromatic
    const ConstraintSystem big = build_system(bundled_b154(), b154_rules());
    const auto all_red = verify_coloring(big, Coloring(154, Color::Red));
    std::size_t mono = 0;
    for (const auto& v : all_red) mono += v.kind == Violation::Kind::MonochromaticSet ? 1 : 0;
    CHECK(mono == big.nae_edges.size());

    CHECK_THROWS_AS(verify_coloring(sys, Coloring(3, Color::Red)), LengthMismatchError);
}

TEST_CASE("dimacs export") {
    CHECK(export_dimacs(empty_system(1)) == "p cnf 1 0\n");

    ConstraintSystem one = empty_system(3);
    one.nae_edges.push_back({0, 1, 2});
    CHECK(export_dimacs(one) == "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");

    const ConstraintSystem s46 = build_system(bundled_b46(), b46_rules());
    const std::string text = export_dimacs(s46);
    CHECK(s46.clause_count() == 2 * (56 + 108 + 56) + 2);
    // header plus one line per clause
    CHECK(std::count(text.begin(), text.end(), '\n') == 1 + s46.clause_count());
    CHECK(text.rfind("p cnf 46 442\n", 0) == 0);
    CHECK(export_dimacs(s46) == text);  // bit-identical
}

TEST_CASE("deterministic verdicts and witnesses") {
    const ConstraintSystem sys = build_system(bundled_b46(), b46_rules());
    const Verdict a = solve(sys);
    const Verdict b = solve(sys);
    CHECK(a.status == b.status);
    CHECK(a.stats.decisions == b.stats.decisions);
    CHECK(a.stats.propagations == b.stats.propagations);

    ConstraintSystem sat = empty_system(12);
    sat.nae_edges.push_back({0, 5, 7});
    const Verdict w1 = solve(sat);
    const Verdict w2 = solve(sat);
    REQUIRE(w1.witness);
    CHECK(*w1.witness == *w2.witness);
}

TEST_CASE("brute force size limit") {
    CHECK_THROWS_AS(brute_force(empty_system(31)), SizeLimitError);
    CHECK(brute_force(empty_system(4)).status == Status::Sat);
}

TEST_CASE("deleting any square corner dissolves the rhombus constraint") {
    std::vector<Point> pts{
        {FieldElement::from_int(0), FieldElement::from_int(0)},
        {FieldElement::from_int(1), FieldElement::from_int(0)},
        {FieldElement::from_int(1), FieldElement::from_int(1)},
        {FieldElement::from_int(0), FieldElement::from_int(1)},
    };
    const PointSet square = PointSet::from_points(std::move(pts), "square");
    Rules rules;
    rules.forbid_c4 = true;
    rules.anchors = {{0, Color::Red}, {1, Color::Red}, {2, Color::Red}, {3, Color::Red}};
    const AuditReport audit = audit_minimality(square, rules, 1);
    CHECK(audit.full_status == Status::Unsat);
    CHECK(audit.entries.size() == 4);
    for (const auto& e : audit.entries) {
        CHECK(e.status == Status::Sat);
        CHECK(e.anchor_removed);
    }
}
