#pragma once

#include "proxima/space.hpp"

#include <string>
#include <string_view>

namespace proxima {

struct RenderStyle {
    std::string interior_fill = "#8fd694";
    std::string contour_stroke = "#1e6b2a";
    std::string boundary_fill = "#fcd9a8";
    std::string boundary_stroke = "#d9822b";
    double stroke_width = 1.5;
    double vertex_radius = 2.5;
    int width = 640;
    int height = 480;
    int margin = 16;
};

/// SVG 1.1 picture of the space: one element per cell in cell-id order,
/// class "closure" for cl(highlight) and "boundary" for the rest.
std::string render_svg(const CWSpace& space, std::string_view highlight, const RenderStyle& style = {});

} // namespace proxima
