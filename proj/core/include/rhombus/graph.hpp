#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rhombus {

/// Simple undirected graph with optional vertex labels. Neighbor lists are
/// kept sorted, so iteration order is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}
    Graph(std::size_t n, std::vector<std::string> labels) : adj_(n), labels_(std::move(labels)) {}

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const { return adj_[v].size(); }

    std::string label(std::size_t v) const {
        return v < labels_.size() ? labels_[v] : std::to_string(v);
    }
    void set_label(std::size_t v, std::string s);

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

/// All triangles {i<j<k}, lexicographically sorted.
std::vector<std::array<std::size_t, 3>> triangles(const Graph& g);

/// All induced 4-cycles, one entry per cycle, in cycle order (a,b,c,d):
/// edges ab, bc, cd, da present; diagonals ac, bd absent. Canonical form:
/// a is the smallest vertex and b < d.
std::vector<std::array<std::size_t, 4>> induced_four_cycles(const Graph& g);

/// Text format: first line is the vertex count, then one "u v" edge per line.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

}  // namespace rhombus
