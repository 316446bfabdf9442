#include "proxima/render.hpp"

#include "proxima/kernel.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace proxima {

namespace {

std::string num(double v) {
    char buf[64];
    if (v == 0) v = 0; // drop negative zero
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
    std::string s(buf, res.ptr);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s == "-0" ? "0" : s;
}

} // namespace

std::string render_svg(const CWSpace& space, std::string_view highlight, const RenderStyle& style) {
    CellSet cl = closure(space, space.complex(highlight).cells);
    CellSet bdy = contour(space, cl).cells;

    double min_x = std::numeric_limits<double>::max(), min_y = min_x;
    double max_x = std::numeric_limits<double>::lowest(), max_y = max_x;
    for (const auto& [v, p] : space.vertices()) {
        min_x = std::min(min_x, p.x.to_double());
        max_x = std::max(max_x, p.x.to_double());
        min_y = std::min(min_y, p.y.to_double());
        max_y = std::max(max_y, p.y.to_double());
    }
    if (space.vertices().empty()) min_x = min_y = max_x = max_y = 0;
    double span_x = std::max(max_x - min_x, 1e-9), span_y = std::max(max_y - min_y, 1e-9);
    double scale = std::min((style.width - 2.0 * style.margin) / span_x, (style.height - 2.0 * style.margin) / span_y);
    auto sx = [&](const Point2& p) { return num(style.margin + (p.x.to_double() - min_x) * scale); };
    auto sy = [&](const Point2& p) { return num(style.height - style.margin - (p.y.to_double() - min_y) * scale); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(style.width) +
           "\" height=\"" + std::to_string(style.height) + "\" viewBox=\"0 0 " + std::to_string(style.width) + " " +
           std::to_string(style.height) + "\">\n";
    out += "<title>" + std::string(highlight) + "</title>\n";
    out += "<style>\n";
    out += "polygon.closure{fill:" + style.interior_fill + ";stroke:none}\n";
    out += "polygon.boundary{fill:" + style.boundary_fill + ";stroke:none}\n";
    out += "line.closure{stroke:" + style.contour_stroke + ";stroke-width:" + num(style.stroke_width) + "}\n";
    out += "line.boundary{stroke:" + style.boundary_stroke + ";stroke-width:" + num(style.stroke_width) + "}\n";
    out += "line.contour{stroke-width:" + num(style.stroke_width * 2) + "}\n";
    out += "circle.closure{fill:" + style.contour_stroke + "}\n";
    out += "circle.boundary{fill:" + style.boundary_stroke + "}\n";
    out += "</style>\n";

    for (const auto& [id, c] : space.cells()) {
        std::string cls = cl.contains(id) ? "closure" : "boundary";
        if (bdy.contains(id)) cls += " contour";
        std::string attrs = " id=\"c" + std::to_string(id) + "\" class=\"" + cls + "\"";
        const auto& v = c.vertices;
        if (c.dim == 2) {
            out += "<polygon" + attrs + " points=\"";
            for (std::size_t i = 0; i < 3; ++i) {
                const Point2& p = space.point(v[i]);
                out += (i ? " " : "") + sx(p) + "," + sy(p);
            }
            out += "\"/>\n";
        } else if (c.dim == 1) {
            const Point2& a = space.point(v[0]);
            const Point2& b = space.point(v[1]);
            out += "<line" + attrs + " x1=\"" + sx(a) + "\" y1=\"" + sy(a) + "\" x2=\"" + sx(b) + "\" y2=\"" + sy(b) +
                   "\"/>\n";
        } else {
            const Point2& p = space.point(v[0]);
            out += "<circle" + attrs + " cx=\"" + sx(p) + "\" cy=\"" + sy(p) + "\" r=\"" + num(style.vertex_radius) +
                   "\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

} // namespace proxima
