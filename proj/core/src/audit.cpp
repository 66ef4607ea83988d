#include "rhombus/audit.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace rhombus {

namespace {

PointSet erase_point(const PointSet& a, std::size_t del) {
    if (a.lattice_backed()) {
        std::vector<LatticePoint> pts;
        pts.reserve(a.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != del) pts.push_back(a.lattice()[i]);
        return PointSet::from_lattice(std::move(pts), a.label());
    }
    std::vector<Point> pts;
    pts.reserve(a.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (i != del) pts.push_back(a.point(i));
    return PointSet::from_points(std::move(pts), a.label());
}

Rules shift_anchors(const Rules& rules, int del) {
    Rules out = rules;
    out.anchors.clear();
    for (const auto& [idx, color] : rules.anchors) {
        if (idx == del) continue;
        out.anchors.emplace_back(idx > del ? idx - 1 : idx, color);
    }
    return out;
}

}  // namespace

bool AuditReport::all_deletions_sat() const {
    for (const auto& e : entries)
        if (e.status != Status::Sat) return false;
    return true;
}

AuditReport audit_minimality(const PointSet& a, const Rules& rules, int jobs) {
    const auto t0 = std::chrono::steady_clock::now();
    AuditReport report;
    report.label = a.label();
    report.full_status = solve(build_system(a, rules)).status;
    report.entries.resize(a.size());

    const auto run_one = [&](std::size_t del) {
        const auto start = std::chrono::steady_clock::now();
        AuditEntry entry;
        entry.point = static_cast<int>(del);
        for (const auto& [idx, color] : rules.anchors) {
            (void)color;
            if (idx == static_cast<int>(del)) entry.anchor_removed = true;
        }
        const PointSet smaller = erase_point(a, del);
        const Verdict v = solve(build_system(smaller, shift_anchors(rules, static_cast<int>(del))));
        entry.status = v.status;
        entry.witness = v.witness;
        entry.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.entries[del] = std::move(entry);
    };

    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 1) {
        for (std::size_t del = 0; del < a.size(); ++del) run_one(del);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (;;) {
                    const std::size_t del = next.fetch_add(1);
                    if (del >= a.size()) return;
                    run_one(del);
                }
            });
        for (auto& t : workers) t.join();
    }
    report.total_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

nlohmann::json audit_to_json(const AuditReport& report) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json je{{"point", e.point},
                          {"anchor_removed", e.anchor_removed},
                          {"status", to_string(e.status)},
                          {"seconds", e.seconds}};
        if (e.witness) je["witness"] = to_bit_string(*e.witness);
        entries.push_back(std::move(je));
    }
    return nlohmann::json{{"label", report.label},
                          {"full_status", to_string(report.full_status)},
                          {"all_deletions_sat", report.all_deletions_sat()},
                          {"total_seconds", report.total_seconds},
                          {"entries", std::move(entries)}};
}

}  // namespace rhombus
