#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rhombus/coloring.hpp"
#include "rhombus/gadget.hpp"
#include "rhombus/pointset.hpp"

namespace rhombus {

struct RenderOptions {
    double scale = 90.0;         // pixels per unit distance
    double margin = 0.7;         // in unit distances
    bool draw_unit_edges = true;
    std::vector<std::pair<int, Color>> anchor_marks;
    std::vector<std::vector<int>> highlight_sets;   // hyperedges, drawn bold
    std::vector<std::pair<int, int>> dashed_pairs;  // e.g. 4/sqrt3 segments
};

/// Deterministic SVG bytes for fixed input and options. Coordinates come
/// from the advisory float path; rendering is display-only.
std::string render_svg(const PointSet& set, const RenderOptions& opts = {});

/// The gadget with its rhombus solid and equality segments dashed.
std::string render_gadget_svg(const GadgetSet& gadget, const RenderOptions& opts = {});

}  // namespace rhombus
