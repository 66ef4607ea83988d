#include "rhombus/product.hpp"

#include <algorithm>

namespace rhombus {

Graph cartesian_product(const Graph& g, const Graph& h) {
    const std::size_t ng = g.vertex_count(), nh = h.vertex_count();
    Graph p(ng * nh);
    for (std::size_t a = 0; a < ng; ++a)
        for (std::size_t b = 0; b < nh; ++b) {
            const std::size_t v = a * nh + b;
            p.set_label(v, "(" + g.label(a) + "," + h.label(b) + ")");
            for (std::size_t a2 : g.neighbors(a))
                if (a2 > a) p.add_edge(v, a2 * nh + b);
            for (std::size_t b2 : h.neighbors(b))
                if (b2 > b) p.add_edge(v, a * nh + b2);
        }
    return p;
}

Graph cartesian_power(const Graph& g, int m) {
    if (m < 1) throw Error("cartesian_power requires m >= 1");
    const std::size_t n = g.vertex_count();
    double size = 1;
    for (int i = 0; i < m; ++i) size *= static_cast<double>(n);
    if (size > 1e6)
        throw SizeLimitError("cartesian_power would materialize " + std::to_string(size) +
                             " vertices; cap is 1e6");
    Graph p = g;
    for (int i = 1; i < m; ++i) p = cartesian_product(g, p);
    return p;
}

std::vector<std::size_t> power_coords(std::size_t index, std::size_t base, int m) {
    std::vector<std::size_t> coords(m);
    for (int i = m - 1; i >= 0; --i) {
        coords[i] = index % base;
        index /= base;
    }
    return coords;
}

std::size_t power_index(const std::vector<std::size_t>& coords, std::size_t base) {
    std::size_t idx = 0;
    for (std::size_t c : coords) idx = idx * base + c;
    return idx;
}

bool power_adjacent(const Graph& g, const std::vector<std::size_t>& u,
                    const std::vector<std::size_t>& v) {
    int differing = -1;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i]) {
            if (differing >= 0) return false;
            differing = static_cast<int>(i);
        }
    return differing >= 0 && g.has_edge(u[differing], v[differing]);
}

MonoPatterns find_mono_patterns(const Graph& g, const Coloring& col) {
    if (col.size() != g.vertex_count())
        throw LengthMismatchError("coloring does not cover the vertex set");
    MonoPatterns out;
    for (const auto& t : triangles(g))
        if (col[t[0]] == col[t[1]] && col[t[1]] == col[t[2]]) out.triangles.push_back(t);
    for (const auto& c : induced_four_cycles(g))
        if (col[c[0]] == col[c[1]] && col[c[1]] == col[c[2]] && col[c[2]] == col[c[3]])
            out.four_cycles.push_back(c);
    return out;
}

namespace {

struct SliceTriangle {
    int direction;
    std::size_t base_index;               // power index with the free digit zeroed
    std::array<std::size_t, 3> vertices;  // base-graph vertices of the triangle
};

}  // namespace

std::vector<std::size_t> power_mono_c4_witness(const Graph& g, int m, const Coloring& col) {
    const std::size_t n = g.vertex_count();
    if (m < 1) throw Error("power_mono_c4_witness requires m >= 1");
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) total *= n;
    if (col.size() != total) throw LengthMismatchError("coloring does not cover the power");

    const auto base_tris = triangles(g);
    const auto base_c4s = induced_four_cycles(g);

    std::uint64_t stride = 1;  // n^(m-1-d) while iterating directions
    for (int i = 0; i < m - 1; ++i) stride *= n;

    const auto verify_and_return = [&](std::array<std::size_t, 4> cycle) {
        const Color c0 = col[cycle[0]];
        std::vector<std::vector<std::size_t>> coords;
        for (std::size_t v : cycle) {
            if (col[v] != c0) throw Error("witness quadruple is not monochromatic");
            coords.push_back(power_coords(v, n, m));
        }
        for (int i = 0; i < 4; ++i) {
            if (!power_adjacent(g, coords[i], coords[(i + 1) % 4]))
                throw Error("witness quadruple is not a 4-cycle");
        }
        if (power_adjacent(g, coords[0], coords[2]) || power_adjacent(g, coords[1], coords[3]))
            throw Error("witness quadruple has an adjacent diagonal");
        return std::vector<std::size_t>(cycle.begin(), cycle.end());
    };

    // Pass 1: scan every slice. An induced 4-cycle inside a slice is already
    // induced in the power, so return it immediately. Otherwise record one
    // monochromatic triangle per slice (the lexicographically first).
    std::vector<SliceTriangle> picked;
    picked.reserve(static_cast<std::size_t>(m) * (total / n));
    std::uint64_t dir_stride = stride;
    for (int d = 0; d < m; ++d) {
        const std::uint64_t hi_count = [&] {
            std::uint64_t c = 1;
            for (int i = 0; i < d; ++i) c *= n;
            return c;
        }();
        const std::uint64_t lo_count = total / (hi_count * n);
        for (std::uint64_t hi = 0; hi < hi_count; ++hi)
            for (std::uint64_t lo = 0; lo < lo_count; ++lo) {
                const std::size_t base = hi * dir_stride * n + lo;
                const auto at = [&](std::size_t t) { return base + t * dir_stride; };
                bool found_triangle = false;
                SliceTriangle st{d, base, {0, 0, 0}};
                for (const auto& tri : base_tris) {
                    if (col[at(tri[0])] == col[at(tri[1])] && col[at(tri[1])] == col[at(tri[2])]) {
                        st.vertices = tri;
                        found_triangle = true;
                        break;  // triangles(g) is lexicographically sorted
                    }
                }
                if (!found_triangle) {
                    for (const auto& c4 : base_c4s) {
                        if (col[at(c4[0])] == col[at(c4[1])] && col[at(c4[1])] == col[at(c4[2])] &&
                            col[at(c4[2])] == col[at(c4[3])])
                            return verify_and_return({at(c4[0]), at(c4[1]), at(c4[2]), at(c4[3])});
                    }
                    std::vector<std::size_t> slice_vertices;
                    for (std::size_t t = 0; t < n; ++t) slice_vertices.push_back(at(t));
                    throw SliceWithoutPatternError(d, std::move(slice_vertices));
                }
                picked.push_back(st);
            }
        dir_stride /= n;
    }

    const std::uint64_t k = picked.size();
    if (3 * k <= total) throw PigeonholeError(3 * k, total);

    // Pass 2: find two picked triangles sharing a power vertex. Triangles in
    // the same direction are vertex-disjoint, so an intersecting pair has two
    // distinct directions and meets in exactly one vertex.
    std::vector<int> owner(total, -1);
    const auto vertex_of = [&](const SliceTriangle& st, std::size_t corner) {
        std::uint64_t s = 1;
        for (int i = 0; i < m - 1 - st.direction; ++i) s *= n;
        return st.base_index + st.vertices[corner] * s;
    };
    for (std::size_t ti = 0; ti < picked.size(); ++ti) {
        for (std::size_t corner = 0; corner < 3; ++corner) {
            const std::size_t v = vertex_of(picked[ti], corner);
            if (owner[v] < 0) {
                owner[v] = static_cast<int>(ti);
                continue;
            }
            // Shared vertex found: assemble the proof's labeled grid.
            const SliceTriangle& t1 = picked[owner[v]];
            const SliceTriangle& t2 = picked[ti];
            const auto shared_coords = power_coords(v, n, m);
            const int d1 = t1.direction, d2 = t2.direction;

            // y1 is the shared vertex's digit in direction d1, y2/y3 the other
            // two corners of t1; likewise z for t2 in direction d2.
            std::array<std::size_t, 3> ys{shared_coords[d1], 0, 0}, zs{shared_coords[d2], 0, 0};
            int yi = 1, zi = 1;
            for (std::size_t corner2 = 0; corner2 < 3; ++corner2) {
                if (t1.vertices[corner2] != ys[0]) ys[yi++] = t1.vertices[corner2];
                if (t2.vertices[corner2] != zs[0]) zs[zi++] = t2.vertices[corner2];
            }

            const auto grid = [&](std::size_t i, std::size_t j) {
                auto coords = shared_coords;
                coords[d1] = ys[i];
                coords[d2] = zs[j];
                return power_index(coords, n);
            };
            const Color red = col[v];
            for (std::size_t i : {1u, 2u})
                for (std::size_t j : {1u, 2u})
                    if (col[grid(i, j)] == red)
                        return verify_and_return({grid(0, 0), grid(i, 0), grid(i, j), grid(0, j)});
            return verify_and_return({grid(1, 1), grid(2, 1), grid(2, 2), grid(1, 2)});
        }
    }
    throw Error("no intersecting slice triangles found despite pigeonhole guarantee");
}

}  // namespace rhombus
