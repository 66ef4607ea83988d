#pragma once

#include <cstdint>
#include <vector>

#include "rhombus/coloring.hpp"
#include "rhombus/error.hpp"
#include "rhombus/graph.hpp"

namespace rhombus {

/// Cartesian product: (v1,v2) ~ (u1,u2) iff v1u1 is a G-edge and v2 = u2, or
/// v1 = u1 and v2u2 is an H-edge. Vertex (g,h) gets index g*|V(H)| + h.
Graph cartesian_product(const Graph& g, const Graph& h);

/// G^1 = G, G^m = G x G^(m-1). Vertices are m-digit base-|V(G)| numbers, most
/// significant digit first. Materialization is capped at 10^6 vertices.
Graph cartesian_power(const Graph& g, int m);

/// Digit helpers for power vertices.
std::vector<std::size_t> power_coords(std::size_t index, std::size_t base, int m);
std::size_t power_index(const std::vector<std::size_t>& coords, std::size_t base);

/// Adjacency in G^m straight from the definition: exactly one coordinate
/// differs, and that difference is a base edge.
bool power_adjacent(const Graph& g, const std::vector<std::size_t>& u,
                    const std::vector<std::size_t>& v);

struct MonoPatterns {
    std::vector<std::array<std::size_t, 3>> triangles;
    std::vector<std::array<std::size_t, 4>> four_cycles;  // induced, cycle order
};

/// Exhaustive monochromatic triangles and induced 4-cycles of g under col.
MonoPatterns find_mono_patterns(const Graph& g, const Coloring& col);

struct SliceWithoutPatternError : Error {
    SliceWithoutPatternError(int direction, std::vector<std::size_t> slice_vertices)
        : Error("slice in direction " + std::to_string(direction) +
                " has neither a monochromatic triangle nor an induced 4-cycle"),
          direction(direction), slice_vertices(std::move(slice_vertices)) {}
    int direction;
    std::vector<std::size_t> slice_vertices;  // power-vertex indices of the slice
};

struct PigeonholeError : Error {
    PigeonholeError(std::uint64_t three_k, std::uint64_t vertex_count)
        : Error("pigeonhole inequality violated: 3k = " + std::to_string(three_k) +
                " <= |V|^m = " + std::to_string(vertex_count)) {}
};

/// Constructive witness: given a 2-coloring of G^m where every slice contains
/// a monochromatic triangle or induced 4-cycle and 3*m*|V|^(m-1) > |V|^m,
/// returns a monochromatic induced 4-cycle of the power, in cycle order.
/// Slices are scanned lazily by coordinate arithmetic; the power graph is
/// never materialized. The returned quadruple is re-verified against the
/// adjacency definition before returning.
std::vector<std::size_t> power_mono_c4_witness(const Graph& g, int m, const Coloring& col);

}  // namespace rhombus
