#include "rhombus/embed.hpp"

#include <cmath>
#include <sstream>

#include "rhombus/error.hpp"

namespace rhombus {

namespace {

double dist(const std::array<double, 2>& p, const std::array<double, 2>& q) {
    return std::hypot(p[0] - q[0], p[1] - q[1]);
}

}  // namespace

bool is_unit_embedding(const Graph& g, const Embedding& emb, double tol) {
    if (emb.size() != g.vertex_count()) return false;
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (std::size_t v : g.neighbors(u))
            if (u < v && std::abs(dist(emb[u], emb[v]) - 1.0) > tol) return false;
    return true;
}

std::pair<Embedding, EmbedReport> embed_product(const Graph& g, const Embedding& eg,
                                                const Graph& h, const Embedding& eh,
                                                double angle) {
    if (!is_unit_embedding(g, eg) || !is_unit_embedding(h, eh))
        throw Error("embed_product requires unit embeddings of both factors");
    const double c = std::cos(angle), s = std::sin(angle);
    const std::size_t ng = g.vertex_count(), nh = h.vertex_count();
    Embedding out(ng * nh);
    for (std::size_t a = 0; a < ng; ++a)
        for (std::size_t b = 0; b < nh; ++b)
            out[a * nh + b] = {eg[a][0] + c * eh[b][0] - s * eh[b][1],
                               eg[a][1] + s * eh[b][0] + c * eh[b][1]};

    EmbedReport report;
    const auto adjacent = [&](std::size_t u, std::size_t v) {
        const std::size_t au = u / nh, bu = u % nh, av = v / nh, bv = v % nh;
        return (au == av && h.has_edge(bu, bv)) || (bu == bv && g.has_edge(au, av));
    };
    for (std::size_t u = 0; u < out.size(); ++u)
        for (std::size_t v = u + 1; v < out.size(); ++v) {
            const double d = dist(out[u], out[v]);
            if (adjacent(u, v)) {
                report.max_edge_error = std::max(report.max_edge_error, std::abs(d - 1.0));
            } else {
                if (d < 1e-9)
                    report.collisions.push_back({EmbedIssue::Kind::CoincidentPair, u, v, d});
                else if (std::abs(d - 1.0) < 1e-6)
                    report.collisions.push_back({EmbedIssue::Kind::NonEdgeNearUnit, u, v, d});
            }
        }
    return {std::move(out), std::move(report)};
}

Embedding segment_embedding() { return {{0.0, 0.0}, {1.0, 0.0}}; }

Embedding triangle_embedding() {
    return {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}};
}

Embedding parse_embedding(std::string_view text) {
    Embedding emb;
    std::istringstream is{std::string(text)};
    double x, y;
    while (is >> x >> y) emb.push_back({x, y});
    return emb;
}

std::string format_embedding(const Embedding& emb) {
    std::ostringstream os;
    os.precision(17);
    for (const auto& p : emb) os << p[0] << " " << p[1] << "\n";
    return os.str();
}

}  // namespace rhombus
