#pragma once

#include "proxima/space.hpp"

#include <utility>
#include <vector>

namespace proxima {

using Loop = std::vector<VertexId>;
using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

/// All closed face walks of a straight-line planar graph.
///
/// Each directed edge is used by exactly one walk. A walk keeps its face on
/// the left, so bounded faces have positive signed area.
std::vector<Loop> face_walks(const CWSpace& space, const EdgeList& edges);

/// Splits a closed walk at repeated vertices into simple loops of length >= 3.
std::vector<Loop> split_simple(const Loop& walk);

/// Rotates to the smallest vertex and picks the direction with the smaller second vertex.
Loop canonical_loop(const Loop& loop);

Rational loop_area2(const CWSpace& space, const Loop& loop);

/// Face walks split into simple loops, canonicalized and de-duplicated.
std::vector<Loop> simple_face_loops(const CWSpace& space, const EdgeList& edges);

/// Edge cells of `cells` as vertex pairs.
EdgeList edge_list(const CWSpace& space, const CellSet& cells);

} // namespace proxima
