#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "rhombus/constraints.hpp"
#include "rhombus/pointset.hpp"
#include "rhombus/reduce.hpp"
#include "rhombus/solver.hpp"

namespace rhombus {

// All subcommand logic lives here so tests can drive it directly; the CLI
// binary is a thin flag-parsing shell. Exit codes: 0 expected verdict,
// 1 unexpected verdict, 2 usage or I/O error (raised as exceptions and
// mapped by the caller).
struct CommandResult {
    int exit_code = 0;
    nlohmann::json report;
    std::string artifact;  // SVG / CNF / point text when the command emits one
};

/// Resolves "b154", "b46", "c3", "segment", or a file path.
PointSet resolve_points(const std::string& source, PointFormat format);

struct VerifyOptions {
    std::string target = "custom";  // b154 | b46 | b7 | custom
    std::string points_path;        // custom only
    PointFormat format = PointFormat::Lattice;
    Rules rules;                    // custom only
    std::optional<Status> expect;   // named targets default to UNSAT
};
CommandResult cmd_verify(const VerifyOptions& opts);

struct ChainOptions {
    std::optional<std::string> b154_path;  // override the bundled data
    std::optional<std::string> b46_path;
    bool materialize = false;  // also build gadget (+)_2 b46 numerically
};
CommandResult cmd_chain(const ChainOptions& opts);

struct RenderCliOptions {
    std::string source = "b46";  // b154 | b46 | b7 | file path
    PointFormat format = PointFormat::Lattice;
    bool mark_default_anchors = false;
    std::vector<std::pair<int, Color>> anchor_marks;
};
CommandResult cmd_render(const RenderCliOptions& opts);

struct AuditOptions {
    std::string source = "b46";
    PointFormat format = PointFormat::Lattice;
    std::optional<Rules> rules;  // named targets default to their canonical rules
    int jobs = 0;                // 0 = hardware concurrency
};
CommandResult cmd_audit(const AuditOptions& opts);

struct CombineOptions {
    std::string a_source, b_source;
    PointFormat a_format = PointFormat::Lattice;
    PointFormat b_format = PointFormat::Lattice;
    int m = 2;
};
CommandResult cmd_combine(const CombineOptions& opts);

struct ReduceCliOptions {
    std::string source = "b46";
    PointFormat format = PointFormat::Lattice;
    std::optional<Rules> rules;
    std::string mode = "greedy";  // greedy | forced-triples | forced-pairs
    std::string policy = "file-order";
    std::uint64_t seed = 0;
};
CommandResult cmd_reduce(const ReduceCliOptions& opts);

struct ExportCnfOptions {
    std::string source = "b46";
    PointFormat format = PointFormat::Lattice;
    std::optional<Rules> rules;
};
CommandResult cmd_export_cnf(const ExportCnfOptions& opts);

struct GraphDemoOptions {
    std::string mode = "witness";  // witness | embed
    std::string base = "k6";       // kN | cN for either mode; also "segment"
    std::string other = "";        // embed: second factor, defaults to base
    int power = 3;                 // witness only
    int trials = 10;
    std::uint64_t seed = 0;
    std::optional<double> angle;   // embed: fixed angle instead of random ones
};
CommandResult cmd_graph_demo(const GraphDemoOptions& opts);

/// target: b154 | b46 | b7 (gadget JSON).
CommandResult cmd_dump_data(const std::string& target);

/// Rules as the canonical targets use them.
Rules rules_for_target(const std::string& target);

/// FNV-1a over the DIMACS bytes; recorded so external solver runs can be
/// tied back to the exact exported system.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace rhombus
