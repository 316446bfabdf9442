#include "proxima/cycles.hpp"

#include "proxima/error.hpp"

#include <algorithm>
#include <set>

namespace proxima {

namespace {

std::vector<Point2> polygon(const CWSpace& space, const Loop& loop) {
    std::vector<Point2> pts;
    pts.reserve(loop.size());
    for (VertexId v : loop) pts.push_back(space.point(v));
    return pts;
}

// Edges of the 2-cell region of `cl` that bound exactly one of its 2-cells.
EdgeList region_boundary(const CWSpace& space, const CellSet& cl) {
    EdgeList out;
    for (CellId id : cl) {
        const Cell& c = space.cell(id);
        if (c.dim != 1) continue;
        int incident = 0;
        for (CellId t : space.cofaces(id)) incident += cl.contains(t) ? 1 : 0;
        if (incident == 1) out.emplace_back(c.vertices[0], c.vertices[1]);
    }
    return out;
}

} // namespace

CellSet Cycle::loop_cells(const CWSpace& space) const {
    CellSet out(edges.begin(), edges.end());
    for (VertexId v : loop) {
        if (auto c = space.vertex_cell(v)) out.insert(*c);
    }
    return out;
}

Cycle make_cycle(const CWSpace& space, const CellSet& cells, const Loop& loop) {
    Cycle c;
    c.loop = loop;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        auto e = space.edge_cell(loop[i], loop[(i + 1) % loop.size()]);
        if (!e) {
            throw Error(ErrorCode::InvalidCell, "no edge between " + std::to_string(loop[i]) + " and " +
                                                    std::to_string(loop[(i + 1) % loop.size()]));
        }
        c.edges.push_back(*e);
    }
    CellSet on_loop = c.loop_cells(space);
    auto poly = polygon(space, loop);
    for (CellId id : cells) {
        const Cell& t = space.cell(id);
        if (t.dim != 2) continue;
        Point2 m = centroid(space.point(t.vertices[0]), space.point(t.vertices[1]), space.point(t.vertices[2]));
        if (locate(poly, m) != Location::Inside) continue;
        c.interior.insert(id);
        for (CellId f : closure(space, {id})) {
            if (!on_loop.contains(f)) c.interior.insert(f);
        }
    }
    c.filled = !c.interior.empty();
    return c;
}

std::vector<Cycle> extract_cycles(const CWSpace& space, const CellSet& cells) {
    CellSet cl = closure(space, cells);
    std::set<Loop> loops;
    auto add_all = [&](const std::vector<Loop>& found) { loops.insert(found.begin(), found.end()); };

    add_all(simple_face_loops(space, region_boundary(space, cl)));

    for (const auto& [name, reg] : space.complexes()) {
        CellSet sub = closure(space, reg.cells);
        if (sub == cl || !is_subset(sub, cl) || count_dim(space, sub, 2) == 0) continue;
        add_all(simple_face_loops(space, region_boundary(space, sub)));
    }

    for (const Loop& walk : face_walks(space, edge_list(space, cl))) {
        if (loop_area2(space, walk).sign() <= 0) continue;
        for (const Loop& piece : split_simple(walk)) {
            if (loop_area2(space, piece).sign() <= 0) continue;
            if (piece.size() == 3) {
                auto t = space.triangle_cell(piece[0], piece[1], piece[2]);
                if (t && cl.contains(*t)) continue;
            }
            loops.insert(canonical_loop(piece));
        }
    }

    std::vector<Cycle> out;
    out.reserve(loops.size());
    for (const Loop& loop : loops) out.push_back(make_cycle(space, cl, loop));
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.loop.front() != b.loop.front()) return a.loop.front() < b.loop.front();
        if (a.loop.size() != b.loop.size()) return a.loop.size() < b.loop.size();
        return a.loop < b.loop;
    });
    return out;
}

bool is_filled_cycle(const CWSpace&, const Cycle& c) {
    return !c.interior.empty();
}

FilledCycleResult shape_closure_is_filled_cycle(const CWSpace& space, const CellSet& cells) {
    CellSet cl = closure(space, cells);
    if (cl.empty()) return {false, "empty complex"};
    Contour bdy = contour(space, cl);
    if (bdy.loops.size() != 1) {
        return {false, "contour has " + std::to_string(bdy.loops.size()) + " loops"};
    }
    if (!bdy.dangling_edges.empty()) {
        return {false, "contour has " + std::to_string(bdy.dangling_edges.size()) + " dangling edges"};
    }
    if (!bdy.isolated_vertices.empty()) return {false, "contour has isolated vertices"};
    if (count_dim(space, bdy.cells, 1) != bdy.loops.front().size()) {
        return {false, "contour edges do not form a single loop"};
    }
    CellSet inside = set_difference(cl, bdy.cells);
    if (count_dim(space, inside, 2) == 0) return {false, "interior has no 2-cell"};
    return {true, "single loop of " + std::to_string(bdy.loops.front().size()) + " vertices"};
}

Ribbon make_ribbon(const CWSpace& space, const Cycle& outer, const Cycle& inner) {
    if (!outer.filled || !inner.filled) throw Error(ErrorCode::NotNested, "ribbon cycles must be filled");
    if (!is_subset(inner.interior, outer.interior)) {
        throw Error(ErrorCode::NotNested, "inner interior is not inside the outer interior");
    }
    std::set<VertexId> outer_vertices(outer.loop.begin(), outer.loop.end());
    bool share = std::any_of(inner.loop.begin(), inner.loop.end(),
                             [&](VertexId v) { return outer_vertices.contains(v); });
    auto poly = polygon(space, outer.loop);
    bool strictly_inside = std::all_of(inner.loop.begin(), inner.loop.end(), [&](VertexId v) {
        return locate(poly, space.point(v)) == Location::Inside;
    });
    if (!share && !strictly_inside) throw Error(ErrorCode::NotNested, "cycles neither nest nor intersect");

    Ribbon r{outer, inner, {}};
    r.body = set_union(outer.loop_cells(space), outer.interior);
    r.body = set_union(r.body, inner.loop_cells(space));
    r.body = set_difference(r.body, inner.interior);
    if (count_dim(space, r.body, 2) == 0) throw Error(ErrorCode::NotNested, "ribbon body has no 2-cell");
    return r;
}

} // namespace proxima
