#include "proxima/kernel.hpp"

#include <algorithm>
#include <iterator>

namespace proxima {

CellSet set_union(const CellSet& a, const CellSet& b) {
    CellSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

CellSet set_intersection(const CellSet& a, const CellSet& b) {
    CellSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

CellSet set_difference(const CellSet& a, const CellSet& b) {
    CellSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

bool is_subset(const CellSet& a, const CellSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

CellSet closure(const CWSpace& space, const CellSet& cells) {
    CellSet out = cells;
    std::vector<CellId> todo(cells.begin(), cells.end());
    while (!todo.empty()) {
        CellId id = todo.back();
        todo.pop_back();
        for (CellId f : space.faces(id)) {
            if (out.insert(f).second) todo.push_back(f);
        }
    }
    return out;
}

CellSet closure(const CWSpace& space, std::string_view complex_name) {
    return closure(space, space.complex(complex_name).cells);
}

Contour contour(const CWSpace& space, const CellSet& cells) {
    Contour out;
    CellSet cl = closure(space, cells);
    CellSet loop_edges;
    for (CellId id : cl) {
        const Cell& c = space.cell(id);
        if (c.dim == 1) {
            int incident = 0;
            for (CellId t : space.cofaces(id)) incident += cl.contains(t) ? 1 : 0;
            if (incident <= 1) {
                out.cells.insert(id);
                for (CellId f : space.faces(id)) out.cells.insert(f);
            }
            if (incident == 1) loop_edges.insert(id);
            if (incident == 0) out.dangling_edges.insert(id);
        } else if (c.dim == 0) {
            bool has_edge = std::any_of(space.cofaces(id).begin(), space.cofaces(id).end(),
                                        [&](CellId e) { return cl.contains(e); });
            if (!has_edge) {
                out.cells.insert(id);
                out.isolated_vertices.insert(id);
            }
        }
    }
    CellSet walk_edges = set_union(loop_edges, out.dangling_edges);
    out.loops = simple_face_loops(space, edge_list(space, walk_edges));
    std::sort(out.loops.begin(), out.loops.end());
    return out;
}

CellSet interior(const CWSpace& space, const CellSet& cells) {
    return set_difference(closure(space, cells), contour(space, cells).cells);
}

CellSet boundary_region(const CWSpace& space, const CellSet& cells) {
    return set_difference(space.universe(), closure(space, cells));
}

std::vector<CellSet> components(const CWSpace& space, const CellSet& cells) {
    std::vector<CellSet> out;
    CellSet seen;
    for (CellId start : cells) {
        if (seen.contains(start)) continue;
        CellSet piece;
        std::vector<CellId> todo{start};
        seen.insert(start);
        while (!todo.empty()) {
            CellId id = todo.back();
            todo.pop_back();
            piece.insert(id);
            auto visit = [&](CellId n) {
                if (cells.contains(n) && seen.insert(n).second) todo.push_back(n);
            };
            for (CellId f : space.faces(id)) visit(f);
            for (CellId f : space.cofaces(id)) visit(f);
        }
        out.push_back(std::move(piece));
    }
    return out;
}

CWReport verify_cw_conditions(const CWSpace& space) {
    CWReport report;
    for (const auto& [id, c] : space.cells()) {
        std::size_t expected = c.dim == 0 ? 0 : (c.dim == 1 ? 2 : 3);
        if (space.faces(id).size() != expected) {
            report.containment = false;
            report.notes.push_back("cell " + std::to_string(id) + " has a face missing from the space");
        }
    }

    const auto& reg = space.complexes();
    std::set<CellSet> registered;
    for (const auto& [name, c] : reg) registered.insert(closure(space, c.cells));
    for (auto a = reg.begin(); a != reg.end(); ++a) {
        for (auto b = std::next(a); b != reg.end(); ++b) {
            CellSet common = set_intersection(closure(space, a->second.cells), closure(space, b->second.cells));
            if (common.empty()) continue;
            if (closure(space, common) != common) {
                report.intersection = false;
                report.notes.push_back("intersection of " + a->first + " and " + b->first + " is not closed");
                continue;
            }
            if (registered.contains(common)) continue;
            std::string name = a->first + "&" + b->first;
            report.notes.push_back("intersection of " + a->first + " and " + b->first +
                                   " is not registered; representable as " + name);
            report.missing_intersections.push_back(CellComplex{name, common, {}});
            registered.insert(common);
        }
    }

    // distinct realizations, and no two cells of the same dimension overlapping improperly
    std::vector<const Cell*> edges, triangles;
    for (const auto& [id, c] : space.cells()) {
        if (c.dim == 1) edges.push_back(&c);
        if (c.dim == 2) triangles.push_back(&c);
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& e = edges[i]->vertices;
            const auto& f = edges[j]->vertices;
            if (segments_overlap_improperly(space.point(e[0]), space.point(e[1]), space.point(f[0]),
                                            space.point(f[1]))) {
                report.hausdorff = false;
                report.notes.push_back("edges " + std::to_string(edges[i]->id) + " and " +
                                       std::to_string(edges[j]->id) + " overlap");
            }
        }
    }
    for (std::size_t i = 0; i < triangles.size(); ++i) {
        for (std::size_t j = i + 1; j < triangles.size(); ++j) {
            const auto& t = triangles[i]->vertices;
            const auto& u = triangles[j]->vertices;
            if (triangles_overlap(space.point(t[0]), space.point(t[1]), space.point(t[2]), space.point(u[0]),
                                  space.point(u[1]), space.point(u[2]))) {
                report.hausdorff = false;
                report.notes.push_back("triangles " + std::to_string(triangles[i]->id) + " and " +
                                       std::to_string(triangles[j]->id) + " overlap");
            }
        }
    }
    std::set<Point2> seen_points;
    for (const auto& [v, p] : space.vertices()) {
        if (!seen_points.insert(p).second) {
            report.hausdorff = false;
            report.notes.push_back("vertex " + std::to_string(v) + " repeats a point");
        }
    }
    return report;
}

std::size_t register_missing_intersections(CWSpace& space, const CWReport& report) {
    std::size_t added = 0;
    for (const CellComplex& c : report.missing_intersections) {
        if (space.has_complex(c.name)) continue;
        space.register_complex(c);
        ++added;
    }
    return added;
}

} // namespace proxima
