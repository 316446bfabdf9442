#include "proxima/builder.hpp"

#include "proxima/error.hpp"
#include "proxima/kernel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace proxima {

void SpaceBuilder::add_point(VertexId id, Point2 p) {
    points_.emplace_back(id, p);
}

void SpaceBuilder::add_point(VertexId id, std::string_view x, std::string_view y) {
    add_point(id, Point2{Rational::parse(x), Rational::parse(y)});
}

void SpaceBuilder::add_constraint(VertexId a, VertexId b) {
    constraints_.emplace_back(a, b);
}

void SpaceBuilder::add_loop(const Loop& loop) {
    for (std::size_t i = 0; i < loop.size(); ++i) add_constraint(loop[i], loop[(i + 1) % loop.size()]);
}

CWSpace SpaceBuilder::build() const {
    std::map<VertexId, Point2> pts;
    for (const auto& [id, p] : points_) {
        if (!pts.emplace(id, p).second) throw Error(ErrorCode::DuplicateId, "point " + std::to_string(id));
    }

    std::set<std::pair<VertexId, VertexId>> edges;
    std::map<VertexId, std::set<VertexId>> adj;
    auto blocked = [&](VertexId a, VertexId b) {
        const Point2& pa = pts.at(a);
        const Point2& pb = pts.at(b);
        for (const auto& [id, p] : pts) {
            if (id != a && id != b && on_segment(pa, pb, p)) return true;
        }
        for (const auto& [c, d] : edges) {
            if (c == a || c == b || d == a || d == b) continue;
            if (segments_cross(pa, pb, pts.at(c), pts.at(d))) return true;
        }
        return false;
    };
    auto insert = [&](VertexId a, VertexId b) {
        if (a > b) std::swap(a, b);
        edges.emplace(a, b);
        adj[a].insert(b);
        adj[b].insert(a);
    };

    for (auto [a, b] : constraints_) {
        if (!pts.contains(a) || !pts.contains(b) || a == b) {
            throw Error(ErrorCode::InvalidArgument, "bad constraint " + std::to_string(a) + "-" + std::to_string(b));
        }
        if (edges.contains({std::min(a, b), std::max(a, b)})) continue;
        if (blocked(a, b)) {
            throw Error(ErrorCode::InvalidArgument,
                        "constraint " + std::to_string(a) + "-" + std::to_string(b) + " crosses the input");
        }
        insert(a, b);
    }

    std::vector<std::tuple<Rational, VertexId, VertexId>> candidates;
    for (auto i = pts.begin(); i != pts.end(); ++i) {
        for (auto j = std::next(i); j != pts.end(); ++j) {
            candidates.emplace_back(squared_distance(i->second, j->second), i->first, j->first);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [len, a, b] : candidates) {
        if (edges.contains({a, b}) || blocked(a, b)) continue;
        insert(a, b);
    }

    CWSpace space;
    CellId next = 0;
    for (const auto& [id, p] : pts) space.add_vertex(id, p);
    for (const auto& [id, p] : pts) space.add_cell(Cell{next++, 0, {id}});
    for (const auto& [a, b] : edges) space.add_cell(Cell{next++, 1, {a, b}});
    for (const auto& [a, b] : edges) {
        for (VertexId c : adj[a]) {
            if (c <= b || !adj[b].contains(c)) continue;
            const Point2 &pa = pts.at(a), &pb = pts.at(b), &pc = pts.at(c);
            if (orientation(pa, pb, pc) == 0) continue;
            std::vector<Point2> tri{pa, pb, pc};
            bool empty = std::none_of(pts.begin(), pts.end(), [&](const auto& q) {
                return locate(tri, q.second) == Location::Inside;
            });
            if (empty) space.add_cell(Cell{next++, 2, {a, b, c}});
        }
    }
    return space;
}

CellSet polygon_region(const CWSpace& space, const Loop& outer, const std::vector<Loop>& holes) {
    auto polygon = [&](const Loop& loop) {
        std::vector<Point2> pts;
        for (VertexId v : loop) pts.push_back(space.point(v));
        return pts;
    };
    auto outer_poly = polygon(outer);
    std::vector<std::vector<Point2>> hole_polys;
    for (const Loop& h : holes) hole_polys.push_back(polygon(h));

    CellSet picked;
    for (const auto& [id, c] : space.cells()) {
        if (c.dim != 2) continue;
        Point2 m = centroid(space.point(c.vertices[0]), space.point(c.vertices[1]), space.point(c.vertices[2]));
        if (locate(outer_poly, m) != Location::Inside) continue;
        bool in_hole = std::any_of(hole_polys.begin(), hole_polys.end(),
                                   [&](const auto& h) { return locate(h, m) != Location::Outside; });
        if (!in_hole) picked.insert(id);
    }
    return closure(space, picked);
}

} // namespace proxima
