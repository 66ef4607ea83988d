#pragma once

#include <array>
#include <vector>

#include "rhombus/graph.hpp"

namespace rhombus {

/// Float coordinates, one per vertex. Advisory only; no exact certificate
/// ever reads these.
using Embedding = std::vector<std::array<double, 2>>;

bool is_unit_embedding(const Graph& g, const Embedding& emb, double tol = 1e-9);

struct EmbedIssue {
    enum class Kind { NonEdgeNearUnit, CoincidentPair };
    Kind kind;
    std::size_t u, v;
    double distance;
};

struct EmbedReport {
    double max_edge_error = 0;
    std::vector<EmbedIssue> collisions;
    bool ok(double edge_tol = 1e-9) const {
        return max_edge_error <= edge_tol && collisions.empty();
    }
};

/// Places product vertex (a,b) at embG(a) + R(angle)*embH(b). Every product
/// edge stays unit up to float error; the report lists each non-edge within
/// 1e-6 of distance 1 and each coincident pair. Collisions are reported, not
/// thrown; the caller retries with a fresh angle.
std::pair<Embedding, EmbedReport> embed_product(const Graph& g, const Embedding& eg,
                                                const Graph& h, const Embedding& eh,
                                                double angle);

Embedding segment_embedding();
Embedding triangle_embedding();

/// Parses/writes one "x y" float coordinate line per vertex.
Embedding parse_embedding(std::string_view text);
std::string format_embedding(const Embedding& emb);

}  // namespace rhombus
