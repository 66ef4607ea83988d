#include "rhombus/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "rhombus/constraints.hpp"

namespace rhombus {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

struct Canvas {
    double min_x = 0, min_y = 0, scale = 1, height = 0;

    std::pair<double, double> map(const std::array<double, 2>& p) const {
        // SVG y grows downward.
        return {(p[0] - min_x) * scale, height - (p[1] - min_y) * scale};
    }
};

Canvas fit_canvas(const std::vector<std::array<double, 2>>& pts, double scale, double margin) {
    Canvas c;
    if (pts.empty()) {
        c.scale = scale;
        c.height = 2 * margin * scale;
        c.min_x = c.min_y = -margin;
        return c;
    }
    double min_x = pts[0][0], max_x = pts[0][0], min_y = pts[0][1], max_y = pts[0][1];
    for (const auto& p : pts) {
        min_x = std::min(min_x, p[0]);
        max_x = std::max(max_x, p[0]);
        min_y = std::min(min_y, p[1]);
        max_y = std::max(max_y, p[1]);
    }
    c.scale = scale;
    c.min_x = min_x - margin;
    c.min_y = min_y - margin;
    c.height = (max_y - min_y + 2 * margin) * scale;
    return c;
}

double canvas_width(const std::vector<std::array<double, 2>>& pts, const Canvas& c,
                    double margin) {
    if (pts.empty()) return 2 * margin * c.scale;
    double min_x = pts[0][0], max_x = pts[0][0];
    for (const auto& p : pts) {
        min_x = std::min(min_x, p[0]);
        max_x = std::max(max_x, p[0]);
    }
    return (max_x - min_x + 2 * margin) * c.scale;
}

void open_svg(std::ostringstream& os, double width, double height) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
       << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
}

void line(std::ostringstream& os, const Canvas& c, const std::array<double, 2>& p,
          const std::array<double, 2>& q, const std::string& style) {
    const auto [x1, y1] = c.map(p);
    const auto [x2, y2] = c.map(q);
    os << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
       << "\" y2=\"" << num(y2) << "\" " << style << "/>\n";
}

void circle(std::ostringstream& os, const Canvas& c, const std::array<double, 2>& p, double r,
            const std::string& fill) {
    const auto [x, y] = c.map(p);
    os << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r)
       << "\" fill=\"" << fill << "\"/>\n";
}

}  // namespace

std::string render_svg(const PointSet& set, const RenderOptions& opts) {
    std::vector<std::array<double, 2>> pts;
    pts.reserve(set.size());
    for (const auto& p : set.points()) pts.push_back(to_xy(p));
    const Canvas canvas = fit_canvas(pts, opts.scale, opts.margin);
    const double width = canvas_width(pts, canvas, opts.margin);

    std::ostringstream os;
    open_svg(os, width, canvas.height);

    if (opts.draw_unit_edges && set.size() >= 2) {
        const Graph ug = unit_graph(set);
        for (std::size_t u = 0; u < ug.vertex_count(); ++u)
            for (std::size_t v : ug.neighbors(u))
                if (u < v)
                    line(os, canvas, pts[u], pts[v],
                         "stroke=\"#999999\" stroke-width=\"1.2\"");
    }
    for (const auto& [i, j] : opts.dashed_pairs)
        line(os, canvas, pts[i], pts[j],
             "stroke=\"#555555\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\"");
    for (const auto& hs : opts.highlight_sets)
        for (std::size_t x = 0; x < hs.size(); ++x)
            for (std::size_t y = x + 1; y < hs.size(); ++y)
                line(os, canvas, pts[hs[x]], pts[hs[y]],
                     "stroke=\"#cc6600\" stroke-width=\"2.4\"");

    std::vector<int> mark(set.size(), -1);
    for (const auto& [idx, color] : opts.anchor_marks)
        if (idx >= 0 && static_cast<std::size_t>(idx) < set.size())
            mark[idx] = color == Color::Red ? 0 : 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const char* fill = mark[i] == 0 ? "#cc2222" : mark[i] == 1 ? "#2244cc" : "#000000";
        circle(os, canvas, pts[i], mark[i] >= 0 ? 5.0 : 3.2, fill);
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_gadget_svg(const GadgetSet& gadget, const RenderOptions& opts) {
    const Canvas canvas = fit_canvas(gadget.witness, opts.scale, opts.margin);
    const double width = canvas_width(gadget.witness, canvas, opts.margin);

    std::ostringstream os;
    open_svg(os, width, canvas.height);
    for (int i = 0; i < 4; ++i) {
        const int u = gadget.index_of(gadget.rhombus[i]);
        const int v = gadget.index_of(gadget.rhombus[(i + 1) % 4]);
        line(os, canvas, gadget.witness[u], gadget.witness[v],
             "stroke=\"#000000\" stroke-width=\"1.6\"");
    }
    for (const auto& [a, b] : gadget.equality_pairs)
        line(os, canvas, gadget.witness[gadget.index_of(a)], gadget.witness[gadget.index_of(b)],
             "stroke=\"#555555\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\"");
    for (std::size_t i = 0; i < gadget.witness.size(); ++i)
        circle(os, canvas, gadget.witness[i], 3.6, "#000000");
    os << "</svg>\n";
    return os.str();
}

}  // namespace rhombus
