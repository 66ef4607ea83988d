#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rhombus/coloring.hpp"
#include "rhombus/constraints.hpp"

namespace rhombus {

enum class Status { Sat, Unsat };

inline const char* to_string(Status s) { return s == Status::Sat ? "SAT" : "UNSAT"; }

struct SolveStats {
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t assignments_examined = 0;  // brute force only
    double seconds = 0.0;
};

struct Verdict {
    Status status = Status::Sat;
    std::optional<Coloring> witness;  // present iff SAT; passes verify_coloring
    SolveStats stats;
};

/// Complete decision procedure: backtracking with unit propagation over the
/// clause translation (each not-all-equal edge S contributes the clauses
/// (OR_i x_i) and (OR_i !x_i); each equality edge two implications; anchors
/// unit clauses). Fixed variable order: lowest index first, red first.
/// Deterministic for a given system.
Verdict solve(const ConstraintSystem& sys);

/// Independent oracle: enumerates all assignments respecting anchors.
/// Throws SizeLimitError above 30 variables.
Verdict brute_force(const ConstraintSystem& sys);

struct Violation {
    enum class Kind { MonochromaticSet, UnequalPair, Anchor };
    Kind kind;
    std::vector<int> indices;
};

/// Every monochromatic nae_edge, bichromatic eq_edge, and broken anchor.
/// Empty list iff the coloring is valid. Throws LengthMismatchError.
std::vector<Violation> verify_coloring(const ConstraintSystem& sys, const Coloring& col);

/// Standard DIMACS CNF, bit-exact across runs: header "p cnf <vars> <clauses>",
/// then nae clauses (positive then negative per edge), eq implications, and
/// anchor units, in system order. Variables are point index + 1; red = true.
std::string export_dimacs(const ConstraintSystem& sys);

}  // namespace rhombus
