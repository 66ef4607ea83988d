#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rhombus/lattice.hpp"
#include "rhombus/point.hpp"

namespace rhombus {

enum class PointFormat { Lattice, Field };

// Ordered, duplicate-free planar point set. Order is semantic: anchors are
// "the first m points" of a set, so file order is preserved everywhere.
// Sets read from lattice text keep the integer backing for fast exact
// squared distances.
class PointSet {
public:
    PointSet() = default;

    static PointSet from_points(std::vector<Point> pts, std::string label);
    static PointSet from_lattice(std::vector<LatticePoint> pts, std::string label);

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& point(std::size_t i) const { return points_[i]; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    bool lattice_backed() const { return !lattice_.empty(); }
    const std::vector<LatticePoint>& lattice() const { return lattice_; }

    /// Exact squared distance between points i and j as a field element.
    FieldElement sqdist(std::size_t i, std::size_t j) const;

    /// Integer fast path; only valid when lattice_backed().
    SqDist lattice_sqdist_at(std::size_t i, std::size_t j) const;

    bool contains(const Point& p) const;

private:
    std::vector<Point> points_;
    std::vector<LatticePoint> lattice_;  // empty unless lattice-backed
    std::string label_;
};

/// Parses point text. Lattice lines hold four signed integers separated by
/// spaces or commas, with optional surrounding brackets. Field lines hold
/// eight rationals "num/den" (coefficients over 1, sqrt3, sqrt11, sqrt33 for
/// x then y). Blank lines and '#' comments are ignored. Duplicates rejected.
PointSet parse_points(std::string_view text, PointFormat format, std::string label = "points");

/// Writes the set back out; Lattice requires a lattice-backed set.
std::string format_points(const PointSet& set, PointFormat format);

PointSet load_points(const std::string& path, PointFormat format);

}  // namespace rhombus
