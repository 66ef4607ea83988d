#include "rhombus/pointset.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "rhombus/error.hpp"

namespace rhombus {

namespace {

void check_no_duplicates(const std::vector<Point>& pts) {
    std::map<Point, std::size_t, PointLess> seen;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto [it, inserted] = seen.emplace(pts[i], i);
        if (!inserted) throw DuplicatePointError(it->second, i);
    }
}

// Splits a data line into tokens, treating commas and brackets as separators.
std::vector<std::string> tokenize(const std::string& line) {
    std::string cleaned;
    cleaned.reserve(line.size());
    for (char ch : line) {
        if (ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')')
            cleaned.push_back(' ');
        else
            cleaned.push_back(ch);
    }
    std::istringstream is(cleaned);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

bool is_integer_token(const std::string& tok) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

}  // namespace

PointSet PointSet::from_points(std::vector<Point> pts, std::string label) {
    check_no_duplicates(pts);
    PointSet set;
    set.points_ = std::move(pts);
    set.label_ = std::move(label);
    return set;
}

PointSet PointSet::from_lattice(std::vector<LatticePoint> pts, std::string label) {
    PointSet set;
    set.points_.reserve(pts.size());
    for (const auto& p : pts) set.points_.push_back(lift_lattice(p));
    check_no_duplicates(set.points_);
    set.lattice_ = std::move(pts);
    set.label_ = std::move(label);
    return set;
}

FieldElement PointSet::sqdist(std::size_t i, std::size_t j) const {
    if (lattice_backed()) return to_field(lattice_sqdist(lattice_[i], lattice_[j]));
    return point_sqdist(points_[i], points_[j]);
}

SqDist PointSet::lattice_sqdist_at(std::size_t i, std::size_t j) const {
    return lattice_sqdist(lattice_[i], lattice_[j]);
}

bool PointSet::contains(const Point& p) const {
    for (const auto& q : points_)
        if (q == p) return true;
    return false;
}

PointSet parse_points(std::string_view text, PointFormat format, std::string label) {
    std::vector<LatticePoint> lattice;
    std::vector<Point> pts;
    std::istringstream is{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (format == PointFormat::Lattice) {
            if (tokens.size() != 4)
                throw ParseError("expected 4 integers, got " + std::to_string(tokens.size()),
                                 lineno);
            LatticePoint p;
            BigInt* fields[4] = {&p.a, &p.b, &p.c, &p.d};
            for (int k = 0; k < 4; ++k) {
                if (!is_integer_token(tokens[k]))
                    throw ParseError("bad integer token '" + tokens[k] + "'", lineno);
                // GMP rejects a leading '+'
                *fields[k] = BigInt(tokens[k][0] == '+' ? tokens[k].substr(1) : tokens[k]);
            }
            lattice.push_back(std::move(p));
        } else {
            if (tokens.size() != 8)
                throw ParseError("expected 8 rationals, got " + std::to_string(tokens.size()),
                                 lineno);
            Rational q[8];
            for (int k = 0; k < 8; ++k) {
                try {
                    q[k] = parse_rational(tokens[k]);
                } catch (const Error& e) {
                    throw ParseError(e.what(), lineno);
                }
            }
            pts.push_back(Point{FieldElement{q[0], q[1], q[2], q[3]},
                                FieldElement{q[4], q[5], q[6], q[7]}});
        }
    }
    if (format == PointFormat::Lattice) return PointSet::from_lattice(std::move(lattice), std::move(label));
    return PointSet::from_points(std::move(pts), std::move(label));
}

std::string format_points(const PointSet& set, PointFormat format) {
    std::ostringstream os;
    if (format == PointFormat::Lattice) {
        if (!set.lattice_backed() && !set.empty())
            throw Error("point set '" + set.label() + "' has no lattice form");
        for (const auto& p : set.lattice())
            os << "[" << p.a.get_str() << ", " << p.b.get_str() << ", " << p.c.get_str() << ", "
               << p.d.get_str() << "]\n";
    } else {
        for (const auto& p : set.points())
            os << to_string(p.x) << " " << to_string(p.y) << "\n";
    }
    return os.str();
}

PointSet load_points(const std::string& path, PointFormat format) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open point file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_points(buf.str(), format, path);
}

}  // namespace rhombus
