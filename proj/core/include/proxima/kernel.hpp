#pragma once

#include "proxima/planar.hpp"
#include "proxima/space.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace proxima {

/// Cells plus all of their faces.
CellSet closure(const CWSpace& space, const CellSet& cells);
CellSet closure(const CWSpace& space, std::string_view complex_name);

struct Contour {
    CellSet cells;
    std::vector<Loop> loops;
    /// Edges of the contour bounding no 2-cell.
    CellSet dangling_edges;
    /// 0-cells of cl(A) with no incident edge in cl(A).
    CellSet isolated_vertices;

    bool multi() const { return loops.size() > 1; }
};

/// Edges of cl(A) bounding at most one 2-cell of cl(A), their endpoints, and isolated 0-cells.
Contour contour(const CWSpace& space, const CellSet& cells);

/// cl(A) minus its contour.
CellSet interior(const CWSpace& space, const CellSet& cells);

/// K \ cl(A).
CellSet boundary_region(const CWSpace& space, const CellSet& cells);

/// Connected pieces of a cell set under the face relation.
std::vector<CellSet> components(const CWSpace& space, const CellSet& cells);

struct CWReport {
    bool containment = true;
    bool intersection = true;
    bool hausdorff = true;
    std::vector<std::string> notes;
    /// Pairwise intersections of registered complexes that are not registered themselves.
    std::vector<CellComplex> missing_intersections;

    bool accepted() const { return containment && intersection && hausdorff; }
};

CWReport verify_cw_conditions(const CWSpace& space);

/// Registers the intersections listed in a report; returns how many were added.
std::size_t register_missing_intersections(CWSpace& space, const CWReport& report);

CellSet set_union(const CellSet& a, const CellSet& b);
CellSet set_intersection(const CellSet& a, const CellSet& b);
CellSet set_difference(const CellSet& a, const CellSet& b);
bool is_subset(const CellSet& a, const CellSet& b);

} // namespace proxima
