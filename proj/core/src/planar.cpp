#include "proxima/planar.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace proxima {

namespace {

// Upper half-plane (angle in [0, pi)) sorts before the lower one.
int half(const Rational& dx, const Rational& dy) {
    return (dy.sign() > 0 || (dy.sign() == 0 && dx.sign() > 0)) ? 0 : 1;
}

} // namespace

std::vector<Loop> face_walks(const CWSpace& space, const EdgeList& edges) {
    std::map<VertexId, std::vector<VertexId>> around;
    for (auto [a, b] : edges) {
        around[a].push_back(b);
        around[b].push_back(a);
    }
    for (auto& [v, nbrs] : around) {
        const Point2& o = space.point(v);
        std::sort(nbrs.begin(), nbrs.end(), [&](VertexId p, VertexId q) {
            Rational px = space.point(p).x - o.x, py = space.point(p).y - o.y;
            Rational qx = space.point(q).x - o.x, qy = space.point(q).y - o.y;
            int hp = half(px, py), hq = half(qx, qy);
            if (hp != hq) return hp < hq;
            return (px * qy - py * qx).sign() > 0;
        });
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }

    // next(u -> v) = v -> w, where w precedes u in counter-clockwise order around v
    auto next = [&](VertexId u, VertexId v) {
        const auto& nbrs = around.at(v);
        auto it = std::find(nbrs.begin(), nbrs.end(), u);
        return it == nbrs.begin() ? nbrs.back() : *std::prev(it);
    };

    std::set<std::pair<VertexId, VertexId>> used;
    std::vector<Loop> walks;
    for (const auto& [a, nbrs] : around) {
        for (VertexId b : nbrs) {
            if (used.contains({a, b})) continue;
            Loop walk;
            VertexId u = a, v = b;
            while (used.insert({u, v}).second) {
                walk.push_back(u);
                VertexId w = next(u, v);
                u = v;
                v = w;
            }
            walks.push_back(std::move(walk));
        }
    }
    return walks;
}

std::vector<Loop> split_simple(const Loop& walk) {
    std::vector<Loop> out;
    Loop stack;
    std::map<VertexId, std::size_t> position;
    for (VertexId v : walk) {
        auto it = position.find(v);
        if (it == position.end()) {
            position[v] = stack.size();
            stack.push_back(v);
            continue;
        }
        Loop piece(stack.begin() + static_cast<std::ptrdiff_t>(it->second), stack.end());
        for (std::size_t i = it->second + 1; i < stack.size(); ++i) position.erase(stack[i]);
        stack.resize(it->second + 1);
        if (piece.size() >= 3) out.push_back(std::move(piece));
    }
    if (stack.size() >= 3) out.push_back(std::move(stack));
    return out;
}

Loop canonical_loop(const Loop& loop) {
    if (loop.empty()) return loop;
    auto min_it = std::min_element(loop.begin(), loop.end());
    Loop out(min_it, loop.end());
    out.insert(out.end(), loop.begin(), min_it);
    if (out.size() > 2 && out.back() < out[1]) std::reverse(out.begin() + 1, out.end());
    return out;
}

Rational loop_area2(const CWSpace& space, const Loop& loop) {
    std::vector<Point2> pts;
    pts.reserve(loop.size());
    for (VertexId v : loop) pts.push_back(space.point(v));
    return signed_area2(pts);
}

std::vector<Loop> simple_face_loops(const CWSpace& space, const EdgeList& edges) {
    std::set<Loop> seen;
    std::vector<Loop> out;
    for (const Loop& walk : face_walks(space, edges)) {
        for (Loop& piece : split_simple(walk)) {
            Loop c = canonical_loop(piece);
            if (seen.insert(c).second) out.push_back(std::move(c));
        }
    }
    return out;
}

EdgeList edge_list(const CWSpace& space, const CellSet& cells) {
    EdgeList out;
    for (CellId id : cells) {
        const Cell& c = space.cell(id);
        if (c.dim == 1) out.emplace_back(c.vertices[0], c.vertices[1]);
    }
    return out;
}

} // namespace proxima
