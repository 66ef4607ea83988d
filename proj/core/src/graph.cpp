#include "rhombus/graph.hpp"

#include <algorithm>
#include <sstream>

#include "rhombus/error.hpp"

namespace rhombus {

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw Error("graph is simple; no loops");
    if (u >= adj_.size() || v >= adj_.size()) throw IndexRangeError("edge endpoint out of range");
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v) return;  // already present
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    if (u == v) return false;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const std::size_t w = (&nb == &adj_[u]) ? v : u;
    return std::binary_search(nb.begin(), nb.end(), w);
}

void Graph::set_label(std::size_t v, std::string s) {
    if (labels_.size() < adj_.size()) labels_.resize(adj_.size());
    labels_[v] = std::move(s);
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

std::vector<std::array<std::size_t, 3>> triangles(const Graph& g) {
    std::vector<std::array<std::size_t, 3>> out;
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : g.neighbors(i)) {
            if (j <= i) continue;
            for (std::size_t k : g.neighbors(j)) {
                if (k <= j) continue;
                if (g.has_edge(i, k)) out.push_back({i, j, k});
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<std::size_t, 4>> induced_four_cycles(const Graph& g) {
    // Scan non-adjacent diagonal pairs {a,c} and pick non-adjacent common
    // neighbors {b,d}. Requiring a < b makes a the cycle minimum, so each
    // 4-cycle is reported exactly once.
    std::vector<std::array<std::size_t, 4>> out;
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> common;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = a + 1; c < n; ++c) {
            if (g.has_edge(a, c)) continue;
            common.clear();
            const auto& na = g.neighbors(a);
            const auto& nc = g.neighbors(c);
            std::set_intersection(na.begin(), na.end(), nc.begin(), nc.end(),
                                  std::back_inserter(common));
            for (std::size_t x = 0; x < common.size(); ++x) {
                const std::size_t b = common[x];
                if (b < a) continue;
                for (std::size_t y = x + 1; y < common.size(); ++y) {
                    const std::size_t d = common[y];
                    if (!g.has_edge(b, d)) out.push_back({a, b, c, d});
                }
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

Graph parse_graph(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::size_t n = 0;
    if (!(is >> n)) throw ParseError("missing vertex count", 1);
    Graph g(n);
    std::size_t u, v;
    while (is >> u >> v) g.add_edge(u, v);
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << "\n";
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (std::size_t v : g.neighbors(u))
            if (u < v) os << u << " " << v << "\n";
    return os.str();
}

}  // namespace rhombus
