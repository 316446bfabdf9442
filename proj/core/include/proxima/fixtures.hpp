#pragma once

#include "proxima/space.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace proxima {

struct ShapeFixture {
    std::string name;
    CWSpace space;
    /// Registered complex playing the role of the figure's shape.
    std::string shape;
    std::vector<VertexId> declared_generators;
    /// Whether cl(shape) reads as a single filled 1-cycle in the figure.
    bool expect_filled_cycle = false;
};

/// Known fixture ids, in a fixed order.
const std::vector<std::string>& fixture_names();

/// Fixture id for a name or alias ("earrings", "fig1a", ...). Throws NotFound.
std::string canonical_fixture_name(std::string_view name);

ShapeFixture build_fixture(std::string_view name);

} // namespace proxima
