#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "rhombus/commands.hpp"
#include "rhombus/error.hpp"

using namespace rhombus;

namespace {

PointFormat parse_format(const std::string& s) {
    if (s == "lattice") return PointFormat::Lattice;
    if (s == "field") return PointFormat::Field;
    throw Error("unknown format '" + s + "' (expected lattice or field)");
}

std::pair<int, Color> parse_anchor(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw Error("anchor must be <index>:<red|blue>");
    const int idx = std::stoi(s.substr(0, colon));
    const std::string color = s.substr(colon + 1);
    if (color != "red" && color != "blue") throw Error("anchor color must be red or blue");
    return {idx, color == "red" ? Color::Red : Color::Blue};
}

Rules rules_from_flags(const std::vector<std::string>& forbid, const std::string& equal_dist,
                       const std::vector<std::string>& anchors) {
    Rules rules;
    for (const auto& f : forbid) {
        if (f == "c3")
            rules.forbid_c3 = true;
        else if (f == "c4")
            rules.forbid_c4 = true;
        else if (f == "t")
            rules.forbid_t = true;
        else
            throw Error("unknown family '" + f + "' (expected c3, c4, or t)");
    }
    if (!equal_dist.empty()) {
        if (equal_dist != "d433") throw Error("only --equal-dist d433 is supported");
        rules.equal_dist_433 = true;
    }
    for (const auto& a : anchors) rules.anchors.push_back(parse_anchor(a));
    return rules;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << bytes;
}

// Artifact goes to --out (or stdout without one); the JSON report goes to
// stdout unless the artifact already occupies it.
void emit(const CommandResult& result, const std::string& out_path) {
    if (!result.artifact.empty()) {
        if (out_path.empty()) {
            std::cout << result.artifact;
            return;
        }
        write_file(out_path, result.artifact);
        std::cout << result.report.dump(2) << "\n";
        return;
    }
    if (!out_path.empty()) write_file(out_path, result.report.dump(2) + "\n");
    std::cout << result.report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic verifier for monochromatic unit-rhombus certificates"};
    app.require_subcommand(1);

    std::function<CommandResult()> run;
    std::string out_path;

    std::vector<std::string> forbid, anchors;
    std::string equal_dist, format = "lattice", points_path, expect;
    std::uint64_t seed = 0;
    int jobs = 0;

    // verify
    {
        auto* sub = app.add_subcommand("verify", "Solve a target's constraint system");
        auto target = std::make_shared<std::string>("custom");
        sub->add_option("target", *target, "b154 | b46 | b7 | custom")->required();
        sub->add_option("--points", points_path, "point file for custom targets");
        sub->add_option("--format", format, "lattice | field");
        sub->add_option("--forbid", forbid, "families to forbid: c3, c4, t");
        sub->add_option("--equal-dist", equal_dist, "d433: same-color pairs at 4/sqrt3");
        sub->add_option("--anchor", anchors, "fixed assignment <index>:<red|blue>");
        sub->add_option("--expect", expect, "sat | unsat");
        sub->add_option("--out", out_path, "write the JSON report here");
        sub->callback([&, target] {
            VerifyOptions opts;
            opts.target = *target;
            opts.points_path = points_path;
            opts.format = parse_format(format);
            opts.rules = rules_from_flags(forbid, equal_dist, anchors);
            if (expect == "sat") opts.expect = Status::Sat;
            else if (expect == "unsat") opts.expect = Status::Unsat;
            else if (!expect.empty()) throw Error("--expect must be sat or unsat");
            run = [opts] { return cmd_verify(opts); };
        });
    }

    // chain
    {
        auto* sub = app.add_subcommand("chain", "Run the certificate chain end to end");
        auto b154 = std::make_shared<std::string>(), b46 = std::make_shared<std::string>();
        auto materialize = std::make_shared<bool>(false);
        sub->add_option("--b154", *b154, "override the bundled 154-point file");
        sub->add_option("--b46", *b46, "override the bundled 46-point file");
        sub->add_flag("--materialize", *materialize,
                      "also build b7 (+)_2 b46 numerically and report its size");
        sub->add_option("--out", out_path, "write the JSON report here");
        sub->callback([&, b154, b46, materialize] {
            ChainOptions opts;
            if (!b154->empty()) opts.b154_path = *b154;
            if (!b46->empty()) opts.b46_path = *b46;
            opts.materialize = *materialize;
            run = [opts] { return cmd_chain(opts); };
        });
    }

    // render
    {
        auto* sub = app.add_subcommand("render", "Write an SVG of a point set");
        auto source = std::make_shared<std::string>("b46");
        auto mark = std::make_shared<bool>(false);
        sub->add_option("--points", *source, "b154 | b46 | b7 | file path");
        sub->add_option("--format", format, "lattice | field");
        sub->add_flag("--anchors", *mark, "mark the target's canonical anchors");
        sub->add_option("--anchor", anchors, "extra marks <index>:<red|blue>");
        sub->add_option("--out", out_path, "SVG output path (stdout otherwise)");
        sub->callback([&, source, mark] {
            RenderCliOptions opts;
            opts.source = *source;
            opts.format = parse_format(format);
            opts.mark_default_anchors = *mark;
            for (const auto& a : anchors) opts.anchor_marks.push_back(parse_anchor(a));
            run = [opts] { return cmd_render(opts); };
        });
    }

    // audit
    {
        auto* sub = app.add_subcommand("audit", "Solve every single-point deletion");
        auto target = std::make_shared<std::string>();
        sub->add_option("target", *target, "b154 | b46 | custom")->required();
        sub->add_option("--points", points_path, "point file for custom targets");
        sub->add_option("--format", format, "lattice | field");
        sub->add_option("--forbid", forbid, "families to forbid (custom)");
        sub->add_option("--equal-dist", equal_dist, "d433 (custom)");
        sub->add_option("--anchor", anchors, "anchors (custom)");
        sub->add_option("--jobs", jobs, "solver threads (0 = all cores)");
        sub->add_option("--out", out_path, "write the JSON report here");
        sub->callback([&, target] {
            AuditOptions opts;
            opts.jobs = jobs;
            if (*target == "custom") {
                if (points_path.empty()) throw Error("audit custom requires --points");
                opts.source = points_path;
                opts.format = parse_format(format);
                opts.rules = rules_from_flags(forbid, equal_dist, anchors);
            } else {
                opts.source = *target;
            }
            run = [opts] { return cmd_audit(opts); };
        });
    }

    // combine
    {
        auto* sub = app.add_subcommand("combine", "Union congruent copies of B over A's anchors");
        auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
        auto m = std::make_shared<int>(2);
        auto format_a = std::make_shared<std::string>("lattice");
        auto format_b = std::make_shared<std::string>("lattice");
        sub->add_option("a", *a, "first set: b154 | b46 | c3 | segment | file")->required();
        sub->add_option("b", *b, "second set")->required();
        sub->add_option("-m,--m", *m, "anchor size: 2 or 3")->required();
        sub->add_option("--format-a", *format_a, "lattice | field");
        sub->add_option("--format-b", *format_b, "lattice | field");
        sub->add_option("--out", out_path, "point-file output path");
        sub->callback([&, a, b, m, format_a, format_b] {
            CombineOptions opts;
            opts.a_source = *a;
            opts.b_source = *b;
            opts.m = *m;
            opts.a_format = parse_format(*format_a);
            opts.b_format = parse_format(*format_b);
            run = [opts] { return cmd_combine(opts); };
        });
    }

    // reduce
    {
        auto* sub = app.add_subcommand("reduce", "Greedy 1-minimal shrink or forced-pattern scan");
        auto source = std::make_shared<std::string>();
        auto mode = std::make_shared<std::string>("greedy");
        auto policy = std::make_shared<std::string>("file-order");
        sub->add_option("target", *source, "b154 | b46 | custom")->required();
        sub->add_option("--points", points_path, "point file for custom targets");
        sub->add_option("--format", format, "lattice | field");
        sub->add_option("--forbid", forbid, "families to forbid (custom)");
        sub->add_option("--equal-dist", equal_dist, "d433 (custom)");
        sub->add_option("--anchor", anchors, "anchors (custom)");
        sub->add_option("--mode", *mode, "greedy | forced-triples | forced-pairs");
        sub->add_option("--policy", *policy, "file-order | random | degree-descending");
        sub->add_option("--seed", seed, "seed for the random policy");
        sub->add_option("--out", out_path, "reduced point file (greedy mode)");
        sub->callback([&, source, mode, policy] {
            ReduceCliOptions opts;
            opts.mode = *mode;
            opts.policy = *policy;
            opts.seed = seed;
            if (*source == "custom") {
                if (points_path.empty()) throw Error("reduce custom requires --points");
                opts.source = points_path;
                opts.format = parse_format(format);
                opts.rules = rules_from_flags(forbid, equal_dist, anchors);
            } else {
                opts.source = *source;
            }
            run = [opts] { return cmd_reduce(opts); };
        });
    }

    // export-cnf
    {
        auto* sub = app.add_subcommand("export-cnf", "Write the system as DIMACS CNF");
        auto source = std::make_shared<std::string>();
        sub->add_option("target", *source, "b154 | b46 | custom")->required();
        sub->add_option("--points", points_path, "point file for custom targets");
        sub->add_option("--format", format, "lattice | field");
        sub->add_option("--forbid", forbid, "families to forbid (custom)");
        sub->add_option("--equal-dist", equal_dist, "d433 (custom)");
        sub->add_option("--anchor", anchors, "anchors (custom)");
        sub->add_option("--out", out_path, "CNF output path (stdout otherwise)");
        sub->callback([&, source] {
            ExportCnfOptions opts;
            if (*source == "custom") {
                if (points_path.empty()) throw Error("export-cnf custom requires --points");
                opts.source = points_path;
                opts.format = parse_format(format);
                opts.rules = rules_from_flags(forbid, equal_dist, anchors);
            } else {
                opts.source = *source;
            }
            run = [opts] { return cmd_export_cnf(opts); };
        });
    }

    // graph-demo
    {
        auto* sub = app.add_subcommand("graph-demo",
                                       "Cartesian-power witness search / unit embeddings");
        auto mode = std::make_shared<std::string>("witness");
        auto base = std::make_shared<std::string>("k6");
        auto other = std::make_shared<std::string>("");
        auto power = std::make_shared<int>(3);
        auto trials = std::make_shared<int>(10);
        auto angle = std::make_shared<double>(std::nan(""));
        sub->add_option("--mode", *mode, "witness | embed");
        sub->add_option("--base", *base, "kN | cN | segment");
        sub->add_option("--other", *other, "second factor for embed mode");
        sub->add_option("--power", *power, "Cartesian power exponent (witness)");
        sub->add_option("--trials", *trials, "random colorings / angles");
        sub->add_option("--seed", seed, "RNG seed");
        sub->add_option("--angle", *angle, "fixed rotation angle (embed)");
        sub->add_option("--out", out_path, "write the JSON report here");
        sub->callback([&, mode, base, other, power, trials, angle] {
            GraphDemoOptions opts;
            opts.mode = *mode;
            opts.base = *base;
            opts.other = *other;
            opts.power = *power;
            opts.trials = *trials;
            opts.seed = seed;
            if (!std::isnan(*angle)) opts.angle = *angle;
            run = [opts] { return cmd_graph_demo(opts); };
        });
    }

    // dump-data
    {
        auto* sub = app.add_subcommand("dump-data", "Emit the bundled data files");
        auto target = std::make_shared<std::string>();
        sub->add_option("target", *target, "b154 | b46 | b7")->required();
        sub->add_option("--out", out_path, "output path (stdout otherwise)");
        sub->callback([&, target] { run = [t = *target] { return cmd_dump_data(t); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const CommandResult result = run();
        emit(result, out_path);
        return result.exit_code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
