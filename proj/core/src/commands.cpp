#include "rhombus/commands.hpp"

#include <cmath>
#include <random>

#include "rhombus/audit.hpp"
#include "rhombus/combine.hpp"
#include "rhombus/data.hpp"
#include "rhombus/embed.hpp"
#include "rhombus/error.hpp"
#include "rhombus/gadget.hpp"
#include "rhombus/product.hpp"
#include "rhombus/svg.hpp"

namespace rhombus {

namespace {

nlohmann::json rules_to_json(const Rules& rules) {
    nlohmann::json forbid = nlohmann::json::array();
    if (rules.forbid_c3) forbid.push_back("c3");
    if (rules.forbid_c4) forbid.push_back("c4");
    if (rules.forbid_t) forbid.push_back("t");
    nlohmann::json anchors = nlohmann::json::array();
    for (const auto& [idx, color] : rules.anchors)
        anchors.push_back({{"point", idx}, {"color", to_string(color)}});
    return {{"forbid", std::move(forbid)},
            {"equal_dist_433", rules.equal_dist_433},
            {"anchors", std::move(anchors)}};
}

nlohmann::json stats_to_json(const SolveStats& s) {
    return {{"decisions", s.decisions},
            {"propagations", s.propagations},
            {"assignments_examined", s.assignments_examined},
            {"seconds", s.seconds}};
}

nlohmann::json system_summary(const ConstraintSystem& sys) {
    return {{"variables", sys.var_count},
            {"nae_edges", sys.nae_edges.size()},
            {"eq_edges", sys.eq_edges.size()},
            {"anchors", sys.anchors.size()},
            {"clauses", sys.clause_count()}};
}

nlohmann::json families_summary(const ForbiddenSets& sets) {
    return {{"c3", sets.c3.size()},
            {"c4", sets.c4.size()},
            {"t", sets.t.size()},
            {"eq433", sets.eq433.size()}};
}

Graph named_graph(const std::string& name) {
    if (name == "segment") return complete_graph(2);
    if (name.size() >= 2 && (name[0] == 'k' || name[0] == 'c')) {
        const int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= 64) return name[0] == 'k' ? complete_graph(n) : cycle_graph(n);
    }
    throw Error("unknown graph '" + name + "' (expected kN, cN, or segment)");
}

Embedding named_embedding(const std::string& name) {
    if (name == "segment" || name == "k2") return segment_embedding();
    if (name == "k3" || name == "c3") return triangle_embedding();
    if (name == "c4") return {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    throw Error("no unit embedding built in for '" + name + "'");
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

PointSet resolve_points(const std::string& source, PointFormat format) {
    if (source == "b154") return bundled_b154();
    if (source == "b46") return bundled_b46();
    if (source == "c3") return unit_triangle_set();
    if (source == "segment") return unit_segment_set();
    return load_points(source, format);
}

Rules rules_for_target(const std::string& target) {
    if (target == "b154") return b154_rules();
    if (target == "b46") return b46_rules();
    throw Error("no canonical rules for target '" + target + "'");
}

namespace {

CommandResult verify_gadget(const std::optional<Status>& expect) {
    const GadgetSet gadget = build_b7();
    const ConstraintSystem sys = gadget_system(gadget);
    const Verdict main = solve(sys);
    const Verdict oracle = brute_force(sys);
    const GadgetWitnessReport wit = check_gadget_witness(gadget);

    const Status expected = expect.value_or(Status::Unsat);
    const bool as_expected =
        main.status == expected && oracle.status == main.status && wit.ok();
    CommandResult result;
    result.report = {{"command", "verify"},
                     {"target", "b7"},
                     {"points", gadget.labels.size()},
                     {"system", system_summary(sys)},
                     {"status", to_string(main.status)},
                     {"expected", to_string(expected)},
                     {"as_expected", as_expected},
                     {"stats", stats_to_json(main.stats)},
                     {"brute_force",
                      {{"status", to_string(oracle.status)},
                       {"assignments_examined", oracle.stats.assignments_examined}}},
                     {"gadget_witness",
                      {{"max_equality_pair_error", wit.max_equality_pair_error},
                       {"max_side_error", wit.max_side_error},
                       {"diagonal_gap", wit.diagonal_gap},
                       {"chain_connects_rhombus", wit.equality_chain_connects_rhombus},
                       {"ok", wit.ok()}}}};
    result.exit_code = as_expected ? 0 : 1;
    return result;
}

}  // namespace

CommandResult cmd_verify(const VerifyOptions& opts) {
    if (opts.target == "b7") return verify_gadget(opts.expect);

    PointSet points;
    Rules rules;
    if (opts.target == "custom") {
        if (opts.points_path.empty()) throw Error("verify custom requires --points");
        points = resolve_points(opts.points_path, opts.format);
        rules = opts.rules;
    } else {
        points = resolve_points(opts.target, opts.format);
        rules = rules_for_target(opts.target);
    }
    const ForbiddenSets sets = find_forbidden_sets(points, rules.detection_families());
    const ConstraintSystem sys = build_system(points, rules);
    const Verdict verdict = solve(sys);

    std::optional<Status> expected = opts.expect;
    if (!expected && opts.target != "custom") expected = Status::Unsat;
    const bool as_expected = !expected || verdict.status == *expected;

    CommandResult result;
    result.report = {{"command", "verify"},
                     {"target", opts.target},
                     {"label", points.label()},
                     {"points", points.size()},
                     {"rules", rules_to_json(rules)},
                     {"families", families_summary(sets)},
                     {"system", system_summary(sys)},
                     {"status", to_string(verdict.status)},
                     {"expected", expected ? to_string(*expected) : "any"},
                     {"as_expected", as_expected},
                     {"stats", stats_to_json(verdict.stats)},
                     {"dimacs_fnv1a", fnv1a(export_dimacs(sys))}};
    if (verdict.witness) result.report["witness"] = to_bit_string(*verdict.witness);
    result.exit_code = as_expected ? 0 : 1;
    return result;
}

namespace {

// Float-only materialization of gadget (+)_2 b46: congruence and dedup use
// tolerances, never the exact path. Reports the size; nothing is solved.
std::size_t materialize_gadget_b46(const GadgetSet& gadget, const PointSet& b46) {
    const double d433 = 4.0 / std::sqrt(3.0);
    std::vector<std::array<double, 2>> base;
    for (const auto& p : b46.points()) base.push_back(to_xy(p));

    std::vector<std::array<double, 2>> out = gadget.witness;
    const auto push_unique = [&](const std::array<double, 2>& p) {
        for (const auto& q : out)
            if (std::hypot(p[0] - q[0], p[1] - q[1]) < 1e-7) return;
        out.push_back(p);
    };

    const std::array<double, 2> s0 = base[0], s1 = base[1];
    const double ux = s1[0] - s0[0], uy = s1[1] - s0[1];
    const double len2 = ux * ux + uy * uy;
    const std::size_t ng = gadget.witness.size();
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < ng; ++j) {
            if (i == j) continue;
            const auto& d0 = gadget.witness[i];
            const auto& d1 = gadget.witness[j];
            if (std::abs(std::hypot(d1[0] - d0[0], d1[1] - d0[1]) - d433) > 1e-9) continue;
            const double vx = d1[0] - d0[0], vy = d1[1] - d0[1];
            // direct then reflected copy, as in the exact path
            const double rc = (ux * vx + uy * vy) / len2, rs = (ux * vy - uy * vx) / len2;
            const double pc = (ux * vx - uy * vy) / len2, ps = (uy * vx + ux * vy) / len2;
            for (int reflected = 0; reflected < 2; ++reflected) {
                for (const auto& p : base) {
                    const double x = p[0] - s0[0], y = p[1] - s0[1];
                    double ix, iy;
                    if (!reflected) {
                        ix = rc * x - rs * y;
                        iy = rs * x + rc * y;
                    } else {
                        ix = pc * x + ps * y;
                        iy = ps * x - pc * y;
                    }
                    push_unique({d0[0] + ix, d0[1] + iy});
                }
            }
        }
    return out.size();
}

}  // namespace

CommandResult cmd_chain(const ChainOptions& opts) {
    const PointSet b154 = opts.b154_path ? load_points(*opts.b154_path, PointFormat::Lattice)
                                         : bundled_b154();
    const PointSet b46 =
        opts.b46_path ? load_points(*opts.b46_path, PointFormat::Lattice) : bundled_b46();

    nlohmann::json links = nlohmann::json::array();
    bool all_ok = true;
    const auto add_link = [&](std::string name, bool ok, nlohmann::json extra) {
        extra["name"] = std::move(name);
        extra["ok"] = ok;
        links.push_back(std::move(extra));
        all_ok = all_ok && ok;
    };

    // Anchor geometry: the first three points of b154 form the isosceles
    // triangle exactly; the first two of b46 sit at 4/sqrt3.
    {
        bool ok = b154.size() >= 3;
        if (ok) {
            const SqDist d01 = b154.lattice_sqdist_at(0, 1);
            const SqDist d02 = b154.lattice_sqdist_at(0, 2);
            const SqDist d12 = b154.lattice_sqdist_at(1, 2);
            ok = d01 == sqdist_unit() && d02 == sqdist_unit() && d12 == sqdist_long_side();
        }
        add_link("b154-anchor-geometry", ok, {});
        bool ok46 = b46.size() >= 2 && b46.lattice_sqdist_at(0, 1) == sqdist_433();
        add_link("b46-anchor-geometry", ok46, {});
    }

    // b46 is a subset of b154 as lattice tuples.
    {
        bool subset = true;
        for (const auto& p : b46.lattice()) {
            bool found = false;
            for (const auto& q : b154.lattice())
                if (p == q) {
                    found = true;
                    break;
                }
            if (!found) {
                subset = false;
                break;
            }
        }
        add_link("b46-subset-of-b154", subset, {});
    }

    // The three certificates, in order; solving stops at the first broken
    // link so tamper sweeps stay cheap.
    bool solver_chain_alive = true;
    const auto solve_link = [&](const std::string& name, const PointSet& pts, const Rules& rules) {
        if (!solver_chain_alive) {
            add_link(name, false, {{"skipped", true}});
            return;
        }
        const Verdict v = solve(build_system(pts, rules));
        const bool ok = v.status == Status::Unsat;
        add_link(name, ok,
                 {{"status", to_string(v.status)}, {"stats", stats_to_json(v.stats)}});
        solver_chain_alive = ok;
    };
    solve_link("b154-certificate", b154, b154_rules());
    solve_link("b46-certificate", b46, b46_rules());

    const GadgetSet gadget = build_b7();
    if (solver_chain_alive) {
        const ConstraintSystem gsys = gadget_system(gadget);
        const Verdict v = solve(gsys);
        const Verdict oracle = brute_force(gsys);
        const GadgetWitnessReport wit = check_gadget_witness(gadget);
        const bool ok = v.status == Status::Unsat && oracle.status == Status::Unsat && wit.ok();
        add_link("b7-gadget", ok,
                 {{"status", to_string(v.status)},
                  {"brute_force_status", to_string(oracle.status)},
                  {"assignments_examined", oracle.stats.assignments_examined},
                  {"witness_ok", wit.ok()}});
    } else {
        add_link("b7-gadget", false, {{"skipped", true}});
    }

    CommandResult result;
    result.report = {{"command", "chain"}, {"ok", all_ok}, {"links", std::move(links)}};
    if (opts.materialize) {
        const std::size_t size = materialize_gadget_b46(gadget, b46);
        result.report["materialized"] = {{"what", "b7+b46"}, {"points", size}};
    }
    result.exit_code = all_ok ? 0 : 1;
    return result;
}

CommandResult cmd_render(const RenderCliOptions& opts) {
    CommandResult result;
    if (opts.source == "b7") {
        result.artifact = render_gadget_svg(build_b7());
        result.report = {{"command", "render"}, {"source", "b7"}, {"points", 7}};
        return result;
    }
    const PointSet points = resolve_points(opts.source, opts.format);
    RenderOptions render;
    render.anchor_marks = opts.anchor_marks;
    if (opts.mark_default_anchors)
        for (const auto& [idx, color] : rules_for_target(opts.source).anchors)
            render.anchor_marks.emplace_back(idx, color);
    result.artifact = render_svg(points, render);
    result.report = {{"command", "render"},
                     {"source", opts.source},
                     {"points", points.size()},
                     {"anchors_marked", render.anchor_marks.size()}};
    return result;
}

CommandResult cmd_audit(const AuditOptions& opts) {
    const PointSet points = resolve_points(opts.source, opts.format);
    const Rules rules = opts.rules ? *opts.rules : rules_for_target(opts.source);
    const AuditReport report = audit_minimality(points, rules, opts.jobs);

    CommandResult result;
    result.report = audit_to_json(report);
    result.report["command"] = "audit";
    result.report["target"] = opts.source;
    const bool expected = report.full_status == Status::Unsat && report.all_deletions_sat();
    result.exit_code = expected ? 0 : 1;
    return result;
}

CommandResult cmd_combine(const CombineOptions& opts) {
    const PointSet a = resolve_points(opts.a_source, opts.a_format);
    const PointSet b = resolve_points(opts.b_source, opts.b_format);
    const PointSet combined = combine(a, b, opts.m);
    CommandResult result;
    result.artifact = format_points(combined, PointFormat::Field);
    result.report = {{"command", "combine"},
                     {"a", opts.a_source},
                     {"b", opts.b_source},
                     {"m", opts.m},
                     {"a_size", a.size()},
                     {"b_size", b.size()},
                     {"result_size", combined.size()}};
    return result;
}

CommandResult cmd_reduce(const ReduceCliOptions& opts) {
    const PointSet points = resolve_points(opts.source, opts.format);
    const Rules rules = opts.rules ? *opts.rules : rules_for_target(opts.source);
    CommandResult result;
    if (opts.mode == "greedy") {
        const ReduceResult red = greedy_reduce(points, rules, parse_policy(opts.policy), opts.seed);
        result.artifact = format_points(
            red.reduced, red.reduced.lattice_backed() ? PointFormat::Lattice : PointFormat::Field);
        result.report = reduce_log_to_json(red);
        result.report["command"] = "reduce";
        result.report["mode"] = "greedy";
        result.report["policy"] = opts.policy;
        result.report["seed"] = opts.seed;
    } else if (opts.mode == "forced-triples" || opts.mode == "forced-pairs") {
        const auto patterns = find_forced_patterns(
            points,
            opts.mode == "forced-triples" ? PatternKind::MonoTriple : PatternKind::EqualPair,
            rules);
        std::size_t forced = 0;
        for (const auto& p : patterns) forced += p.forced() ? 1 : 0;
        result.report = {{"command", "reduce"},
                         {"mode", opts.mode},
                         {"classes", patterns.size()},
                         {"forced", forced},
                         {"patterns", forced_patterns_to_json(patterns)}};
    } else {
        throw Error("unknown reduce mode '" + opts.mode + "'");
    }
    return result;
}

CommandResult cmd_export_cnf(const ExportCnfOptions& opts) {
    const PointSet points = resolve_points(opts.source, opts.format);
    const Rules rules = opts.rules ? *opts.rules : rules_for_target(opts.source);
    const ConstraintSystem sys = build_system(points, rules);
    CommandResult result;
    result.artifact = export_dimacs(sys);
    result.report = {{"command", "export-cnf"},
                     {"source", opts.source},
                     {"system", system_summary(sys)},
                     {"bytes", result.artifact.size()},
                     {"fnv1a", fnv1a(result.artifact)}};
    return result;
}

CommandResult cmd_graph_demo(const GraphDemoOptions& opts) {
    CommandResult result;
    if (opts.mode == "witness") {
        const Graph g = named_graph(opts.base);
        const std::size_t n = g.vertex_count();
        std::uint64_t total = 1;
        for (int i = 0; i < opts.power; ++i) total *= n;
        std::mt19937_64 rng(opts.seed);
        nlohmann::json first;
        int verified = 0;
        for (int trial = 0; trial < opts.trials; ++trial) {
            Coloring col(total);
            for (auto& c : col) c = (rng() & 1) ? Color::Red : Color::Blue;
            const auto witness = power_mono_c4_witness(g, opts.power, col);
            ++verified;  // power_mono_c4_witness re-verifies before returning
            if (trial == 0) {
                nlohmann::json tuples = nlohmann::json::array();
                for (std::size_t v : witness)
                    tuples.push_back(power_coords(v, n, opts.power));
                first = {{"vertices", witness},
                         {"coordinates", std::move(tuples)},
                         {"color", to_string(col[witness[0]])}};
            }
        }
        result.report = {{"command", "graph-demo"}, {"mode", "witness"},
                         {"base", opts.base},      {"power", opts.power},
                         {"vertices", total},      {"trials", opts.trials},
                         {"verified", verified},   {"first_witness", std::move(first)}};
        result.exit_code = verified == opts.trials ? 0 : 1;
    } else if (opts.mode == "embed") {
        const Graph g = named_graph(opts.base);
        const Graph h = named_graph(opts.other.empty() ? opts.base : opts.other);
        const Embedding eg = named_embedding(opts.base);
        const Embedding eh = named_embedding(opts.other.empty() ? opts.base : opts.other);
        std::mt19937_64 rng(opts.seed);
        std::uniform_real_distribution<double> uniform(0.0, 2 * 3.14159265358979323846);
        nlohmann::json runs = nlohmann::json::array();
        double worst_edge = 0;
        std::size_t collisions = 0;
        const int count = opts.angle ? 1 : opts.trials;
        for (int i = 0; i < count; ++i) {
            const double angle = opts.angle ? *opts.angle : uniform(rng);
            const auto [emb, rep] = embed_product(g, eg, h, eh, angle);
            worst_edge = std::max(worst_edge, rep.max_edge_error);
            collisions += rep.collisions.size();
            runs.push_back({{"angle", angle},
                            {"max_edge_error", rep.max_edge_error},
                            {"collisions", rep.collisions.size()}});
        }
        result.report = {{"command", "graph-demo"},
                         {"mode", "embed"},
                         {"base", opts.base},
                         {"other", opts.other.empty() ? opts.base : opts.other},
                         {"runs", std::move(runs)},
                         {"max_edge_error", worst_edge},
                         {"total_collisions", collisions}};
        result.exit_code = worst_edge <= 1e-9 ? 0 : 1;
    } else {
        throw Error("unknown graph-demo mode '" + opts.mode + "'");
    }
    return result;
}

CommandResult cmd_dump_data(const std::string& target) {
    CommandResult result;
    if (target == "b154")
        result.artifact = std::string(bundled_b154_text());
    else if (target == "b46")
        result.artifact = std::string(bundled_b46_text());
    else if (target == "b7")
        result.artifact = gadget_to_json(build_b7());
    else
        throw Error("unknown data target '" + target + "'");
    result.report = {{"command", "dump-data"}, {"target", target},
                     {"bytes", result.artifact.size()}};
    return result;
}

}  // namespace rhombus
