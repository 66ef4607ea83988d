#include "rhombus/solver.hpp"

#include <cassert>
#include <chrono>
#include <sstream>

#include "rhombus/error.hpp"

namespace rhombus {

namespace {

// Literal encoding: 2*var for the positive literal (red), 2*var+1 for the
// negative. Clauses carry counters of satisfied and unassigned literals,
// maintained incrementally with exact undo on backtrack.
struct ClauseDb {
    std::vector<std::vector<int>> clauses;
    std::vector<std::vector<int>> occ;  // literal -> clause indices

    explicit ClauseDb(const ConstraintSystem& sys) {
        const auto pos = [](int v) { return 2 * v; };
        const auto neg = [](int v) { return 2 * v + 1; };
        for (const auto& edge : sys.nae_edges) {
            std::vector<int> p, n;
            p.reserve(edge.size());
            n.reserve(edge.size());
            for (int v : edge) {
                p.push_back(pos(v));
                n.push_back(neg(v));
            }
            clauses.push_back(std::move(p));
            clauses.push_back(std::move(n));
        }
        for (const auto& [u, v] : sys.eq_edges) {
            clauses.push_back({neg(u), pos(v)});
            clauses.push_back({pos(u), neg(v)});
        }
        for (const auto& [v, color] : sys.anchors)
            clauses.push_back({color == Color::Red ? pos(v) : neg(v)});
        occ.resize(2 * static_cast<std::size_t>(sys.var_count));
        for (std::size_t ci = 0; ci < clauses.size(); ++ci)
            for (int lit : clauses[ci]) occ[lit].push_back(static_cast<int>(ci));
    }
};

class Dpll {
public:
    Dpll(const ConstraintSystem& sys, ClauseDb db)
        : n_(sys.var_count), db_(std::move(db)), value_(sys.var_count, kUnassigned) {
        sat_count_.assign(db_.clauses.size(), 0);
        free_count_.reserve(db_.clauses.size());
        for (const auto& c : db_.clauses) free_count_.push_back(static_cast<int>(c.size()));
    }

    Verdict run() {
        Verdict verdict;
        const auto t0 = std::chrono::steady_clock::now();
        const bool sat = search();
        verdict.stats.decisions = decisions_;
        verdict.stats.propagations = propagations_;
        verdict.stats.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (sat) {
            verdict.status = Status::Sat;
            Coloring col(n_);
            for (int v = 0; v < n_; ++v)
                col[v] = value_[v] == kTrue ? Color::Red : Color::Blue;
            verdict.witness = std::move(col);
        } else {
            verdict.status = Status::Unsat;
        }
        return verdict;
    }

private:
    static constexpr signed char kUnassigned = -1, kFalse = 0, kTrue = 1;

    bool search() {
        // Unit clauses (anchors) first.
        std::vector<int> units;
        for (std::size_t ci = 0; ci < db_.clauses.size(); ++ci)
            if (db_.clauses[ci].size() == 1) units.push_back(static_cast<int>(ci));
        for (int ci : units)
            if (sat_count_[ci] == 0 && free_count_[ci] == 1 && !propagate_clause(ci)) return false;
        if (!flush_queue()) return false;

        struct Frame {
            int var;
            std::size_t trail_mark;
            bool flipped;
        };
        std::vector<Frame> stack;
        for (;;) {
            const int var = pick_variable();
            if (var < 0) return true;
            ++decisions_;
            const std::size_t mark = trail_.size();
            bool ok = assign(2 * var) && flush_queue();
            stack.push_back({var, mark, false});
            while (!ok) {
                while (!stack.empty() && stack.back().flipped) {
                    rewind_to(stack.back().trail_mark);
                    stack.pop_back();
                }
                if (stack.empty()) return false;
                Frame& f = stack.back();
                rewind_to(f.trail_mark);
                f.flipped = true;
                ok = assign(2 * f.var + 1) && flush_queue();
            }
        }
    }

    int pick_variable() const {
        for (int v = 0; v < n_; ++v)
            if (value_[v] == kUnassigned) return v;
        return -1;
    }

    // Assigns the literal true; updates counters; queues newly-unit clauses.
    bool assign(int lit) {
        const int var = lit / 2;
        assert(value_[var] == kUnassigned);
        value_[var] = (lit % 2 == 0) ? kTrue : kFalse;
        trail_.push_back(var);
        for (int ci : db_.occ[lit]) ++sat_count_[ci];
        bool ok = true;
        for (int ci : db_.occ[lit ^ 1]) {
            if (--free_count_[ci] == 0 && sat_count_[ci] == 0) ok = false;
            else if (free_count_[ci] == 1 && sat_count_[ci] == 0)
                queue_.push_back(ci);
        }
        return ok;
    }

    bool flush_queue() {
        while (!queue_.empty()) {
            const int ci = queue_.back();
            queue_.pop_back();
            if (sat_count_[ci] > 0 || free_count_[ci] != 1) continue;
            if (!propagate_clause(ci)) return false;
        }
        return true;
    }

    bool propagate_clause(int ci) {
        for (int lit : db_.clauses[ci])
            if (value_[lit / 2] == kUnassigned) {
                ++propagations_;
                return assign(lit);
            }
        return true;  // already satisfied or counters stale
    }

    void rewind_to(std::size_t mark) {
        queue_.clear();
        while (trail_.size() > mark) {
            const int var = trail_.back();
            trail_.pop_back();
            const int lit = value_[var] == kTrue ? 2 * var : 2 * var + 1;
            value_[var] = kUnassigned;
            for (int ci : db_.occ[lit]) --sat_count_[ci];
            for (int ci : db_.occ[lit ^ 1]) ++free_count_[ci];
        }
    }

    int n_;
    ClauseDb db_;
    std::vector<signed char> value_;
    std::vector<int> sat_count_, free_count_;
    std::vector<int> trail_;
    std::vector<int> queue_;
    std::uint64_t decisions_ = 0, propagations_ = 0;
};

void check_system(const ConstraintSystem& sys) {
    for (const auto& e : sys.nae_edges) {
        if (e.size() < 2) throw Error("nae edge smaller than 2");
        for (int v : e)
            if (v < 0 || v >= sys.var_count) throw IndexRangeError("nae index out of range");
    }
    for (const auto& [u, v] : sys.eq_edges)
        if (u < 0 || u >= sys.var_count || v < 0 || v >= sys.var_count)
            throw IndexRangeError("eq index out of range");
    for (const auto& [v, c] : sys.anchors) {
        (void)c;
        if (v < 0 || v >= sys.var_count) throw IndexRangeError("anchor index out of range");
    }
}

}  // namespace

Verdict solve(const ConstraintSystem& sys) {
    check_system(sys);
    Verdict verdict = Dpll(sys, ClauseDb(sys)).run();
    if (verdict.status == Status::Sat && !verify_coloring(sys, *verdict.witness).empty())
        throw Error("solver returned an invalid witness");
    return verdict;
}

Verdict brute_force(const ConstraintSystem& sys) {
    check_system(sys);
    if (sys.var_count > 30)
        throw SizeLimitError("brute_force limited to 30 variables, got " +
                             std::to_string(sys.var_count));
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<int> free_vars;
    Coloring col(sys.var_count, Color::Blue);
    std::vector<bool> fixed(sys.var_count, false);
    for (const auto& [v, c] : sys.anchors) {
        if (fixed[v] && col[v] != c) {
            // contradictory anchors: no assignment respects them
            Verdict verdict;
            verdict.status = Status::Unsat;
            verdict.stats.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return verdict;
        }
        col[v] = c;
        fixed[v] = true;
    }
    for (int v = 0; v < sys.var_count; ++v)
        if (!fixed[v]) free_vars.push_back(v);

    Verdict verdict;
    verdict.status = Status::Unsat;
    const std::uint64_t total = 1ull << free_vars.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t i = 0; i < free_vars.size(); ++i)
            col[free_vars[i]] = (mask >> i) & 1 ? Color::Red : Color::Blue;
        ++verdict.stats.assignments_examined;
        if (verify_coloring(sys, col).empty()) {
            verdict.status = Status::Sat;
            verdict.witness = col;
            break;
        }
    }
    verdict.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return verdict;
}

std::vector<Violation> verify_coloring(const ConstraintSystem& sys, const Coloring& col) {
    if (static_cast<int>(col.size()) != sys.var_count)
        throw LengthMismatchError("coloring length " + std::to_string(col.size()) +
                                  " != variable count " + std::to_string(sys.var_count));
    std::vector<Violation> out;
    for (const auto& edge : sys.nae_edges) {
        bool all_same = true;
        for (int v : edge)
            if (col[v] != col[edge[0]]) {
                all_same = false;
                break;
            }
        if (all_same) out.push_back({Violation::Kind::MonochromaticSet, edge});
    }
    for (const auto& [u, v] : sys.eq_edges)
        if (col[u] != col[v]) out.push_back({Violation::Kind::UnequalPair, {u, v}});
    for (const auto& [v, c] : sys.anchors)
        if (col[v] != c) out.push_back({Violation::Kind::Anchor, {v}});
    return out;
}

std::string export_dimacs(const ConstraintSystem& sys) {
    check_system(sys);
    std::ostringstream os;
    os << "p cnf " << sys.var_count << " " << sys.clause_count() << "\n";
    for (const auto& edge : sys.nae_edges) {
        for (int v : edge) os << v + 1 << " ";
        os << "0\n";
        for (int v : edge) os << -(v + 1) << " ";
        os << "0\n";
    }
    for (const auto& [u, v] : sys.eq_edges) {
        os << -(u + 1) << " " << v + 1 << " 0\n";
        os << u + 1 << " " << -(v + 1) << " 0\n";
    }
    for (const auto& [v, c] : sys.anchors)
        os << (c == Color::Red ? v + 1 : -(v + 1)) << " 0\n";
    return os.str();
}

}  // namespace rhombus
