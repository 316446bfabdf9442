#pragma once

#include "proxima/kernel.hpp"

#include <string>
#include <vector>

namespace proxima {

struct Cycle {
    Loop loop;
    std::vector<CellId> edges;
    CellSet interior;
    bool filled = false;

    /// Loop vertices and edges as cells.
    CellSet loop_cells(const CWSpace& space) const;
};

/// Simple closed loops of cl(A): boundary loops of its 2-cell region, boundary
/// loops of registered sub-shapes, and bounded empty faces of its 1-skeleton.
std::vector<Cycle> extract_cycles(const CWSpace& space, const CellSet& cells);

/// Cycle for an explicit loop, with interior taken from the 2-cells of `cells`.
Cycle make_cycle(const CWSpace& space, const CellSet& cells, const Loop& loop);

bool is_filled_cycle(const CWSpace& space, const Cycle& c);

struct FilledCycleResult {
    bool value = false;
    std::string diagnostic;
};

FilledCycleResult shape_closure_is_filled_cycle(const CWSpace& space, const CellSet& cells);

struct Ribbon {
    Cycle outer;
    Cycle inner;
    CellSet body;
};

Ribbon make_ribbon(const CWSpace& space, const Cycle& outer, const Cycle& inner);

} // namespace proxima
