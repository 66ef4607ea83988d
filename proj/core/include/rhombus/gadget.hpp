#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "rhombus/constraints.hpp"

namespace rhombus {

// Seven labeled points: a unit rhombus plus three apexes, with six segments
// of length 4/sqrt3 chaining the rhombus corners together. If points at
// distance 4/sqrt3 must share a color, the rhombus is forced monochromatic.
// The witness coordinates certify planar realizability; the constraint
// structure is what the verification chain consumes.
struct GadgetSet {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> equality_pairs;
    std::array<std::string, 4> rhombus;
    std::vector<std::array<double, 2>> witness;  // parallel to labels

    int index_of(const std::string& label) const;
};

/// The 7-point gadget: rhombus A,B,C,D with apexes E,F,G over edges AB, BC,
/// CD, equality pairs {A,E},{B,E},{B,F},{C,F},{C,G},{D,G}.
GadgetSet build_b7();

/// One not-all-equal edge on the rhombus quadruple plus the six equality
/// edges; 7 variables, no anchors.
ConstraintSystem gadget_system(const GadgetSet& g);

struct GadgetWitnessReport {
    double max_equality_pair_error = 0;  // vs 4/sqrt3
    double max_side_error = 0;           // vs 1
    double diagonal_gap = 0;             // min |diagonal - 1|
    bool equality_chain_connects_rhombus = false;
    bool ok(double pair_tol = 1e-9, double side_tol = 1e-9, double diag_gap = 1e-6) const {
        return max_equality_pair_error <= pair_tol && max_side_error <= side_tol &&
               diagonal_gap > diag_gap && equality_chain_connects_rhombus;
    }
};

GadgetWitnessReport check_gadget_witness(const GadgetSet& g);

/// JSON text record with witness coordinates at 17 significant digits.
std::string gadget_to_json(const GadgetSet& g);
GadgetSet gadget_from_json(const std::string& text);

}  // namespace rhombus
