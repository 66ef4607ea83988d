#include "rhombus/constraints.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rhombus/error.hpp"

namespace rhombus {

namespace {

enum class PairCode : unsigned char { Other, Unit, Dist433, LongSide };

// Classify every pair once; all family detection afterwards is pure
// combinatorics on the code matrix. Lattice-backed sets use the integer
// identity, general sets the field arithmetic. No floats anywhere.
std::vector<PairCode> classify_pairs(const PointSet& a) {
    const std::size_t n = a.size();
    std::vector<PairCode> code(n * n, PairCode::Other);
    const FieldElement unit_f = to_field(sqdist_unit());
    const FieldElement d433_f = to_field(sqdist_433());
    const FieldElement long_f = to_field(sqdist_long_side());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            PairCode c = PairCode::Other;
            if (a.lattice_backed()) {
                const SqDist d = a.lattice_sqdist_at(i, j);
                if (d == sqdist_unit())
                    c = PairCode::Unit;
                else if (d == sqdist_433())
                    c = PairCode::Dist433;
                else if (d == sqdist_long_side())
                    c = PairCode::LongSide;
            } else {
                const FieldElement d = a.sqdist(i, j);
                if (d == unit_f)
                    c = PairCode::Unit;
                else if (d == d433_f)
                    c = PairCode::Dist433;
                else if (d == long_f)
                    c = PairCode::LongSide;
            }
            code[i * n + j] = code[j * n + i] = c;
        }
    return code;
}

}  // namespace

Graph unit_graph(const PointSet& a) {
    const std::size_t n = a.size();
    const auto code = classify_pairs(a);
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (code[i * n + j] == PairCode::Unit) g.add_edge(i, j);
    return g;
}

ForbiddenSets find_forbidden_sets(const PointSet& a, FamilySet families) {
    const std::size_t n = a.size();
    const auto code = classify_pairs(a);
    const auto at = [&](std::size_t i, std::size_t j) { return code[i * n + j]; };

    Graph ug(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (at(i, j) == PairCode::Unit) ug.add_edge(i, j);

    ForbiddenSets out;
    if (families.has(Family::C3Element)) {
        for (const auto& t : triangles(ug))
            out.c3.push_back({static_cast<int>(t[0]), static_cast<int>(t[1]),
                              static_cast<int>(t[2])});
    }
    if (families.has(Family::C4Element)) {
        for (const auto& c : induced_four_cycles(ug)) {
            std::array<int, 4> e{static_cast<int>(c[0]), static_cast<int>(c[1]),
                                 static_cast<int>(c[2]), static_cast<int>(c[3])};
            std::sort(e.begin(), e.end());
            out.c4.push_back(e);
        }
        std::sort(out.c4.begin(), out.c4.end());
    }
    if (families.has(Family::TTriple)) {
        // Two unit sides share the apex; check the long side exactly.
        for (std::size_t apex = 0; apex < n; ++apex) {
            const auto& nb = ug.neighbors(apex);
            for (std::size_t x = 0; x < nb.size(); ++x)
                for (std::size_t y = x + 1; y < nb.size(); ++y)
                    if (at(nb[x], nb[y]) == PairCode::LongSide) {
                        std::array<int, 3> e{static_cast<int>(apex), static_cast<int>(nb[x]),
                                             static_cast<int>(nb[y])};
                        std::sort(e.begin(), e.end());
                        out.t.push_back(e);
                    }
        }
        std::sort(out.t.begin(), out.t.end());
    }
    if (families.has(Family::EqPair433)) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (at(i, j) == PairCode::Dist433)
                    out.eq433.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    return out;
}

FamilySet Rules::detection_families() const {
    FamilySet fams;
    if (forbid_c3) fams.add(Family::C3Element);
    if (forbid_c4) fams.add(Family::C4Element);
    if (forbid_t) fams.add(Family::TTriple);
    if (equal_dist_433) fams.add(Family::EqPair433);
    return fams;
}

Rules parse_rules(std::string_view text) {
    Rules rules;
    std::istringstream is{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "forbid") {
            std::string fam;
            if (!(ls >> fam)) throw ParseError("forbid needs a family", lineno);
            if (fam == "c3")
                rules.forbid_c3 = true;
            else if (fam == "c4")
                rules.forbid_c4 = true;
            else if (fam == "t")
                rules.forbid_t = true;
            else
                throw ParseError("unknown family '" + fam + "'", lineno);
        } else if (word == "equal-dist") {
            std::string which;
            if (!(ls >> which) || which != "d433")
                throw ParseError("only equal-dist d433 is supported", lineno);
            rules.equal_dist_433 = true;
        } else if (word == "anchor") {
            int idx;
            std::string color;
            if (!(ls >> idx >> color)) throw ParseError("anchor needs '<index> <color>'", lineno);
            if (color != "red" && color != "blue")
                throw ParseError("anchor color must be red or blue", lineno);
            rules.anchors.emplace_back(idx, color == "red" ? Color::Red : Color::Blue);
        } else {
            throw ParseError("unknown directive '" + word + "'", lineno);
        }
    }
    return rules;
}

std::string format_rules(const Rules& rules) {
    std::ostringstream os;
    if (rules.forbid_c3) os << "forbid c3\n";
    if (rules.forbid_c4) os << "forbid c4\n";
    if (rules.forbid_t) os << "forbid t\n";
    if (rules.equal_dist_433) os << "equal-dist d433\n";
    for (const auto& [idx, color] : rules.anchors)
        os << "anchor " << idx << " " << to_string(color) << "\n";
    return os.str();
}

ConstraintSystem build_system(const PointSet& a, const Rules& rules) {
    ConstraintSystem sys;
    sys.var_count = static_cast<int>(a.size());
    const ForbiddenSets sets = find_forbidden_sets(a, rules.detection_families());
    if (rules.forbid_c3)
        for (const auto& e : sets.c3) sys.nae_edges.push_back({e[0], e[1], e[2]});
    if (rules.forbid_c4)
        for (const auto& e : sets.c4) sys.nae_edges.push_back({e[0], e[1], e[2], e[3]});
    if (rules.forbid_t)
        for (const auto& e : sets.t) sys.nae_edges.push_back({e[0], e[1], e[2]});
    if (rules.equal_dist_433)
        for (const auto& [i, j] : sets.eq433) sys.eq_edges.emplace_back(i, j);

    std::map<int, Color> anchor_map;
    for (const auto& [idx, color] : rules.anchors) {
        if (idx < 0 || idx >= sys.var_count)
            throw IndexRangeError("anchor index " + std::to_string(idx) + " out of range");
        auto [it, inserted] = anchor_map.emplace(idx, color);
        if (!inserted && it->second != color) throw ConflictingAnchorError(idx);
    }
    for (const auto& [idx, color] : anchor_map) sys.anchors.emplace_back(idx, color);
    return sys;
}

Rules b154_rules() {
    Rules r;
    r.forbid_c3 = r.forbid_c4 = true;
    r.anchors = {{0, Color::Red}, {1, Color::Red}, {2, Color::Red}};
    return r;
}

Rules b46_rules() {
    Rules r;
    r.forbid_c3 = r.forbid_c4 = r.forbid_t = true;
    r.anchors = {{0, Color::Red}, {1, Color::Blue}};
    return r;
}

}  // namespace rhombus
