#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "rhombus/solver.hpp"

namespace rhombus {

struct AuditEntry {
    int point = 0;
    bool anchor_removed = false;  // the deleted point carried an anchor
    Status status = Status::Sat;
    std::optional<Coloring> witness;
    double seconds = 0;
};

struct AuditReport {
    std::string label;
    Status full_status = Status::Sat;  // verdict on the undeleted system
    std::vector<AuditEntry> entries;   // one per point, ordered by index
    double total_seconds = 0;

    bool all_deletions_sat() const;
};

/// Re-detects and re-solves the system with each single point deleted.
/// Anchors on surviving points are kept (indices shifted); deleting an
/// anchored point is reported with anchor_removed rather than skipped.
/// Per-point solves may run on several threads; output order is by index.
AuditReport audit_minimality(const PointSet& a, const Rules& rules, int jobs = 1);

nlohmann::json audit_to_json(const AuditReport& report);

}  // namespace rhombus
