#pragma once

#include <cstdint>
#include <optional>

#include "json.hpp"
#include "rhombus/audit.hpp"
#include "rhombus/solver.hpp"

namespace rhombus {

enum class PatternKind { MonoTriple, EqualPair };

// One congruence class of triples (keyed by the exact squared-distance
// multiset) or of pairs (keyed by the squared distance). "Forced" means
// anchoring one representative monochromatic (triples) or oppositely colored
// (pairs) makes the system unsatisfiable.
struct ForcedPattern {
    std::vector<int> representative;       // lexicographically first member
    std::vector<std::string> signature;    // exact squared distances, printed
    std::size_t class_size = 0;
    Verdict verdict;
    bool forced() const { return verdict.status == Status::Unsat; }
};

struct ForcedPatternOptions {
    // When set, only the classes containing these index tuples are solved.
    std::optional<std::vector<std::vector<int>>> restrict_to_classes_of;
};

/// Scans every congruence class under the base rules' forbidden families
/// (anchors in `base` are ignored; the class anchoring replaces them).
std::vector<ForcedPattern> find_forced_patterns(const PointSet& a, PatternKind kind,
                                                const Rules& base,
                                                const ForcedPatternOptions& opts = {});

enum class ReducePolicy { FileOrder, Random, DegreeDescending };

ReducePolicy parse_policy(const std::string& name);

struct ReduceTrial {
    int point = 0;            // index in the original input set
    std::string point_repr;   // printed coordinates
    Status status = Status::Sat;
    bool kept_deletion = false;
    double seconds = 0;
};

struct ReduceResult {
    PointSet reduced;
    std::vector<ReduceTrial> log;
    AuditReport final_audit;  // certifies 1-minimality
};

/// Repeatedly attempts single-point deletions in policy order, keeping a
/// deletion iff the rebuilt system stays UNSAT. Anchored points are never
/// deleted. Throws InitialSystemSatError when there is nothing to preserve.
ReduceResult greedy_reduce(const PointSet& a, const Rules& rules, ReducePolicy policy,
                           std::uint64_t seed = 0);

nlohmann::json reduce_log_to_json(const ReduceResult& result);
nlohmann::json forced_patterns_to_json(const std::vector<ForcedPattern>& patterns);

}  // namespace rhombus
