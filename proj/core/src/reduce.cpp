#include "rhombus/reduce.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>

#include "rhombus/error.hpp"

namespace rhombus {

namespace {

std::string point_repr(const PointSet& a, std::size_t i) {
    if (a.lattice_backed()) {
        const auto& p = a.lattice()[i];
        return "[" + p.a.get_str() + ", " + p.b.get_str() + ", " + p.c.get_str() + ", " +
               p.d.get_str() + "]";
    }
    return to_string(a.point(i).x) + " " + to_string(a.point(i).y);
}

std::string sqdist_repr(const PointSet& a, std::size_t i, std::size_t j) {
    return to_string(a.sqdist(i, j));
}

PointSet subset_of(const PointSet& a, const std::vector<std::size_t>& keep) {
    if (a.lattice_backed()) {
        std::vector<LatticePoint> pts;
        pts.reserve(keep.size());
        for (std::size_t i : keep) pts.push_back(a.lattice()[i]);
        return PointSet::from_lattice(std::move(pts), a.label());
    }
    std::vector<Point> pts;
    pts.reserve(keep.size());
    for (std::size_t i : keep) pts.push_back(a.point(i));
    return PointSet::from_points(std::move(pts), a.label());
}

}  // namespace

std::vector<ForcedPattern> find_forced_patterns(const PointSet& a, PatternKind kind,
                                                const Rules& base,
                                                const ForcedPatternOptions& opts) {
    Rules detect_rules = base;
    detect_rules.anchors.clear();
    const ConstraintSystem base_sys = build_system(a, detect_rules);

    struct ClassInfo {
        std::vector<int> representative;
        std::size_t size = 0;
    };
    std::map<std::vector<std::string>, ClassInfo> classes;
    const std::size_t n = a.size();
    if (kind == PatternKind::MonoTriple) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    std::vector<std::string> sig{sqdist_repr(a, i, j), sqdist_repr(a, i, k),
                                                 sqdist_repr(a, j, k)};
                    std::sort(sig.begin(), sig.end());
                    auto [it, inserted] = classes.try_emplace(std::move(sig));
                    if (inserted)
                        it->second.representative = {static_cast<int>(i), static_cast<int>(j),
                                                     static_cast<int>(k)};
                    ++it->second.size;
                }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                std::vector<std::string> sig{sqdist_repr(a, i, j)};
                auto [it, inserted] = classes.try_emplace(std::move(sig));
                if (inserted) it->second.representative = {static_cast<int>(i), static_cast<int>(j)};
                ++it->second.size;
            }
    }

    std::optional<std::vector<std::vector<std::string>>> wanted;
    if (opts.restrict_to_classes_of) {
        wanted.emplace();
        for (const auto& tuple : *opts.restrict_to_classes_of) {
            std::vector<std::string> sig;
            for (std::size_t x = 0; x < tuple.size(); ++x)
                for (std::size_t y = x + 1; y < tuple.size(); ++y)
                    sig.push_back(sqdist_repr(a, tuple[x], tuple[y]));
            std::sort(sig.begin(), sig.end());
            wanted->push_back(std::move(sig));
        }
    }

    std::vector<ForcedPattern> out;
    for (const auto& [sig, info] : classes) {
        if (wanted && std::find(wanted->begin(), wanted->end(), sig) == wanted->end()) continue;
        ConstraintSystem sys = base_sys;
        if (kind == PatternKind::MonoTriple) {
            for (int v : info.representative) sys.anchors.emplace_back(v, Color::Red);
        } else {
            sys.anchors.emplace_back(info.representative[0], Color::Red);
            sys.anchors.emplace_back(info.representative[1], Color::Blue);
        }
        ForcedPattern fp;
        fp.representative = info.representative;
        fp.signature = sig;
        fp.class_size = info.size;
        fp.verdict = solve(sys);
        out.push_back(std::move(fp));
    }
    std::sort(out.begin(), out.end(), [](const ForcedPattern& x, const ForcedPattern& y) {
        return x.representative < y.representative;
    });
    return out;
}

ReducePolicy parse_policy(const std::string& name) {
    if (name == "file-order") return ReducePolicy::FileOrder;
    if (name == "random") return ReducePolicy::Random;
    if (name == "degree-descending") return ReducePolicy::DegreeDescending;
    throw Error("unknown policy '" + name + "'");
}

ReduceResult greedy_reduce(const PointSet& a, const Rules& rules, ReducePolicy policy,
                           std::uint64_t seed) {
    if (solve(build_system(a, rules)).status != Status::Unsat) throw InitialSystemSatError();

    std::vector<bool> anchored(a.size(), false);
    for (const auto& [idx, color] : rules.anchors) {
        (void)color;
        anchored[idx] = true;
    }

    std::vector<std::size_t> alive(a.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

    const auto remap_rules = [&](const std::vector<std::size_t>& keep) {
        Rules out = rules;
        out.anchors.clear();
        for (const auto& [idx, color] : rules.anchors) {
            const auto it = std::find(keep.begin(), keep.end(), static_cast<std::size_t>(idx));
            if (it != keep.end())
                out.anchors.emplace_back(static_cast<int>(it - keep.begin()), color);
        }
        return out;
    };

    std::mt19937_64 rng(seed);
    std::vector<ReduceTrial> log;
    bool changed = true;
    while (changed) {
        changed = false;
        // Policy order over the points surviving at the start of the pass.
        // The order carries original ids, so deletions mid-pass are safe.
        std::vector<std::size_t> order = alive;
        if (policy == ReducePolicy::Random) {
            std::shuffle(order.begin(), order.end(), rng);
        } else if (policy == ReducePolicy::DegreeDescending) {
            const PointSet current = subset_of(a, alive);
            const Graph ug = unit_graph(current);
            std::vector<std::size_t> degree_of(a.size(), 0);
            for (std::size_t i = 0; i < alive.size(); ++i) degree_of[alive[i]] = ug.degree(i);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
                return degree_of[x] > degree_of[y];
            });
        }
        for (const std::size_t orig : order) {
            if (anchored[orig]) continue;
            if (std::find(alive.begin(), alive.end(), orig) == alive.end()) continue;
            const auto t0 = std::chrono::steady_clock::now();
            std::vector<std::size_t> trial_keep;
            trial_keep.reserve(alive.size() - 1);
            for (std::size_t x : alive)
                if (x != orig) trial_keep.push_back(x);
            const PointSet trial = subset_of(a, trial_keep);
            const Verdict v = solve(build_system(trial, remap_rules(trial_keep)));
            ReduceTrial tr;
            tr.point = static_cast<int>(orig);
            tr.point_repr = point_repr(a, orig);
            tr.status = v.status;
            tr.kept_deletion = v.status == Status::Unsat;
            tr.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            log.push_back(std::move(tr));
            if (v.status == Status::Unsat) {
                alive = std::move(trial_keep);
                changed = true;
            }
        }
    }

    ReduceResult result{subset_of(a, alive), std::move(log),
                        audit_minimality(subset_of(a, alive), remap_rules(alive), 0)};
    return result;
}

nlohmann::json reduce_log_to_json(const ReduceResult& result) {
    nlohmann::json trials = nlohmann::json::array();
    for (const auto& t : result.log)
        trials.push_back({{"point", t.point},
                          {"point_repr", t.point_repr},
                          {"status", to_string(t.status)},
                          {"kept_deletion", t.kept_deletion},
                          {"seconds", t.seconds}});
    return nlohmann::json{{"reduced_size", result.reduced.size()},
                          {"trials", std::move(trials)},
                          {"one_minimal", result.final_audit.all_deletions_sat()}};
}

nlohmann::json forced_patterns_to_json(const std::vector<ForcedPattern>& patterns) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : patterns)
        arr.push_back({{"representative", p.representative},
                       {"signature", p.signature},
                       {"class_size", p.class_size},
                       {"status", to_string(p.verdict.status)},
                       {"forced", p.forced()},
                       {"decisions", p.verdict.stats.decisions},
                       {"seconds", p.verdict.stats.seconds}});
    return arr;
}

}  // namespace rhombus
