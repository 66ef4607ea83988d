#include "rhombus/gadget.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "rhombus/error.hpp"

namespace rhombus {

int GadgetSet::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw Error("gadget has no point labeled '" + label + "'");
}

GadgetSet build_b7() {
    GadgetSet g;
    g.labels = {"A", "B", "C", "D", "E", "F", "G"};
    g.equality_pairs = {{"A", "E"}, {"B", "E"}, {"B", "F"},
                        {"C", "F"}, {"C", "G"}, {"D", "G"}};
    g.rhombus = {"A", "B", "C", "D"};
    // Unit square (both diagonals sqrt2, well clear of 1) with each apex on
    // the perpendicular bisector of its edge, at 4/sqrt3 from both endpoints.
    const double h = std::sqrt(16.0 / 3.0 - 0.25);
    g.witness = {
        {0.0, 0.0},      // A
        {1.0, 0.0},      // B
        {1.0, 1.0},      // C
        {0.0, 1.0},      // D
        {0.5, -h},       // E over AB
        {1.0 + h, 0.5},  // F over BC
        {0.5, 1.0 + h},  // G over CD
    };
    return g;
}

ConstraintSystem gadget_system(const GadgetSet& g) {
    ConstraintSystem sys;
    sys.var_count = static_cast<int>(g.labels.size());
    std::vector<int> quad;
    for (const auto& lbl : g.rhombus) quad.push_back(g.index_of(lbl));
    sys.nae_edges.push_back(std::move(quad));
    for (const auto& [x, y] : g.equality_pairs)
        sys.eq_edges.emplace_back(g.index_of(x), g.index_of(y));
    return sys;
}

namespace {

double dist(const std::array<double, 2>& p, const std::array<double, 2>& q) {
    return std::hypot(p[0] - q[0], p[1] - q[1]);
}

}  // namespace

GadgetWitnessReport check_gadget_witness(const GadgetSet& g) {
    GadgetWitnessReport rep;
    const double d433 = 4.0 / std::sqrt(3.0);
    for (const auto& [x, y] : g.equality_pairs) {
        const double err =
            std::abs(dist(g.witness[g.index_of(x)], g.witness[g.index_of(y)]) - d433);
        rep.max_equality_pair_error = std::max(rep.max_equality_pair_error, err);
    }
    std::array<int, 4> q;
    for (int i = 0; i < 4; ++i) q[i] = g.index_of(g.rhombus[i]);
    for (int i = 0; i < 4; ++i) {
        const double err = std::abs(dist(g.witness[q[i]], g.witness[q[(i + 1) % 4]]) - 1.0);
        rep.max_side_error = std::max(rep.max_side_error, err);
    }
    rep.diagonal_gap = std::min(std::abs(dist(g.witness[q[0]], g.witness[q[2]]) - 1.0),
                                std::abs(dist(g.witness[q[1]], g.witness[q[3]]) - 1.0));

    // Contract the equality pairs; the rhombus must land in one class.
    std::vector<int> parent(g.labels.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    const auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [x, y] : g.equality_pairs)
        parent[find(g.index_of(x))] = find(g.index_of(y));
    rep.equality_chain_connects_rhombus =
        find(q[0]) == find(q[1]) && find(q[1]) == find(q[2]) && find(q[2]) == find(q[3]);
    return rep;
}

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string gadget_to_json(const GadgetSet& g) {
    // Hand-rolled so the coordinates keep 17 significant digits verbatim.
    std::string out = "{\n  \"labels\": [";
    for (std::size_t i = 0; i < g.labels.size(); ++i)
        out += (i ? ", \"" : "\"") + g.labels[i] + "\"";
    out += "],\n  \"equality_pairs\": [";
    for (std::size_t i = 0; i < g.equality_pairs.size(); ++i) {
        if (i) out += ", ";
        out += "[\"" + g.equality_pairs[i].first + "\", \"" + g.equality_pairs[i].second + "\"]";
    }
    out += "],\n  \"rhombus\": [";
    for (int i = 0; i < 4; ++i) out += (i ? ", \"" : "\"") + std::string(g.rhombus[i]) + "\"";
    out += "],\n  \"witness\": [";
    for (std::size_t i = 0; i < g.witness.size(); ++i) {
        if (i) out += ", ";
        out += "[" + fmt17(g.witness[i][0]) + ", " + fmt17(g.witness[i][1]) + "]";
    }
    out += "]\n}\n";
    return out;
}

GadgetSet gadget_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    GadgetSet g;
    g.labels = j.at("labels").get<std::vector<std::string>>();
    for (const auto& pair : j.at("equality_pairs"))
        g.equality_pairs.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
    const auto& rh = j.at("rhombus");
    for (int i = 0; i < 4; ++i) g.rhombus[i] = rh.at(i).get<std::string>();
    for (const auto& w : j.at("witness"))
        g.witness.push_back({w.at(0).get<double>(), w.at(1).get<double>()});
    return g;
}

}  // namespace rhombus
