#pragma once

#include "proxima/planar.hpp"
#include "proxima/space.hpp"

#include <vector>

namespace proxima {

/// Constrained triangulation of a point set into a CW space.
///
/// Constraint edges are inserted first; the remaining pairs are added
/// shortest first whenever they neither pass through a point nor cross an
/// edge already present. Every empty 3-clique becomes a 2-cell.
class SpaceBuilder {
public:
    void add_point(VertexId id, Point2 p);
    void add_point(VertexId id, std::string_view x, std::string_view y);
    void add_constraint(VertexId a, VertexId b);
    /// Constrains every side of a closed polygon.
    void add_loop(const Loop& loop);

    CWSpace build() const;

private:
    std::vector<std::pair<VertexId, Point2>> points_;
    EdgeList constraints_;
};

/// 2-cells whose centroid lies strictly inside `outer` and outside every hole, closed.
CellSet polygon_region(const CWSpace& space, const Loop& outer, const std::vector<Loop>& holes = {});

} // namespace proxima
