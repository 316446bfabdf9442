#include "proxima/algebra.hpp"

#include "proxima/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace proxima {

namespace {

using Graph = std::map<VertexId, std::vector<VertexId>>;

Graph make_graph(const EdgeList& edges) {
    Graph g;
    for (auto [a, b] : edges) {
        g[a].push_back(b);
        g[b].push_back(a);
    }
    return g;
}

std::map<VertexId, int> bfs(const Graph& g, VertexId source) {
    std::map<VertexId, int> dist{{source, 0}};
    std::deque<VertexId> queue{source};
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        auto it = g.find(u);
        if (it == g.end()) continue;
        for (VertexId w : it->second) {
            if (dist.emplace(w, dist[u] + 1).second) queue.push_back(w);
        }
    }
    return dist;
}

struct Support {
    std::vector<Cycle> cycles;
    EdgeList edges;
    std::set<VertexId> vertices;
};

// Vertices and edges that carry certificates: every extracted cycle plus the contour.
Support support(const CWSpace& space, const CellSet& cells) {
    Support s;
    CellSet cl = closure(space, cells);
    s.cycles = extract_cycles(space, cl);
    std::set<std::pair<VertexId, VertexId>> seen;
    auto add_edge = [&](VertexId a, VertexId b) {
        if (a > b) std::swap(a, b);
        if (seen.emplace(a, b).second) s.edges.emplace_back(a, b);
    };
    for (const Cycle& c : s.cycles) {
        for (std::size_t i = 0; i < c.loop.size(); ++i) add_edge(c.loop[i], c.loop[(i + 1) % c.loop.size()]);
        s.vertices.insert(c.loop.begin(), c.loop.end());
    }
    Contour bdy = contour(space, cl);
    for (auto [a, b] : edge_list(space, bdy.cells)) add_edge(a, b);
    for (VertexId v : vertices_of(space, bdy.cells)) s.vertices.insert(v);
    return s;
}

std::vector<std::set<VertexId>> vertex_components(const std::set<VertexId>& vertices, const Graph& g) {
    std::vector<std::set<VertexId>> out;
    std::set<VertexId> seen;
    for (VertexId v : vertices) {
        if (seen.contains(v)) continue;
        std::set<VertexId> piece;
        for (const auto& [w, d] : bfs(g, v)) piece.insert(w);
        piece.insert(v);
        seen.insert(piece.begin(), piece.end());
        out.push_back(std::move(piece));
    }
    return out;
}

} // namespace

std::string_view to_string(Direction d) noexcept {
    switch (d) {
    case Direction::None: return "none";
    case Direction::Forward: return "forward";
    case Direction::Backward: return "backward";
    case Direction::Path: return "path";
    }
    return "none";
}

const MoveCertificate* FreeAbelianRep::certificate(VertexId v) const {
    for (const MoveCertificate& c : certificates) {
        if (c.vertex == v) return &c;
    }
    return nullptr;
}

FreeAbelianRep cyclic_rep(const CWSpace&, const Cycle& c, VertexId generator) {
    auto it = std::find(c.loop.begin(), c.loop.end(), generator);
    if (it == c.loop.end()) {
        throw Error(ErrorCode::NotOnCycle, "generator " + std::to_string(generator) + " is not on the loop");
    }
    const int n = static_cast<int>(c.loop.size());
    const int g = static_cast<int>(it - c.loop.begin());
    FreeAbelianRep rep;
    rep.generators = {generator};
    rep.group_name = "G(<" + std::to_string(generator) + ">,+)";
    for (int i = 0; i < n; ++i) {
        VertexId a = c.loop[static_cast<std::size_t>(i)], b = c.loop[static_cast<std::size_t>((i + 1) % n)];
        rep.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    for (int i = 0; i < n; ++i) {
        int forward = ((i - g) % n + n) % n;
        int backward = (n - forward) % n;
        MoveCertificate cert{c.loop[static_cast<std::size_t>(i)], generator, std::min(forward, backward),
                             Direction::None};
        if (cert.k > 0) cert.direction = forward <= backward ? Direction::Forward : Direction::Backward;
        rep.certificates.push_back(cert);
    }
    return rep;
}

FreeAbelianRep free_fg_rep(const CWSpace& space, const CellSet& cells, const std::vector<VertexId>& generators) {
    Support s = support(space, cells);
    std::set<VertexId> gens(generators.begin(), generators.end());
    for (VertexId g : gens) {
        if (!s.vertices.contains(g)) {
            throw Error(ErrorCode::NotOnCycle, "generator " + std::to_string(g) + " lies on no cycle or contour");
        }
    }
    for (const Cycle& c : s.cycles) {
        bool covered = std::any_of(c.loop.begin(), c.loop.end(), [&](VertexId v) { return gens.contains(v); });
        if (!covered) {
            throw Error(ErrorCode::UncoveredCycle, "cycle through " + std::to_string(c.loop.front()) +
                                                       " carries no generator");
        }
    }
    Graph g = make_graph(s.edges);
    for (const auto& piece : vertex_components(s.vertices, g)) {
        bool covered = std::any_of(piece.begin(), piece.end(), [&](VertexId v) { return gens.contains(v); });
        if (!covered) {
            throw Error(ErrorCode::UncoveredCycle, "component through " + std::to_string(*piece.begin()) +
                                                       " carries no generator");
        }
    }

    FreeAbelianRep rep;
    rep.generators.assign(gens.begin(), gens.end());
    rep.edges = s.edges;
    rep.group_name = "G(<";
    for (std::size_t i = 0; i < rep.generators.size(); ++i) {
        rep.group_name += (i ? "," : "") + std::to_string(rep.generators[i]);
    }
    rep.group_name += ">,+)";

    // multi-source BFS; sources enter in ascending id so the lower generator wins ties
    std::map<VertexId, std::pair<int, VertexId>> best;
    std::deque<VertexId> queue;
    for (VertexId gen : rep.generators) {
        best[gen] = {0, gen};
        queue.push_back(gen);
    }
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        auto [d, src] = best[u];
        for (VertexId w : g[u]) {
            auto it = best.find(w);
            if (it == best.end()) {
                best[w] = {d + 1, src};
                queue.push_back(w);
            } else if (it->second.first == d + 1 && src < it->second.second) {
                it->second.second = src;
            }
        }
    }
    for (VertexId v : s.vertices) {
        auto [d, src] = best.at(v);
        rep.certificates.push_back({v, src, d, d == 0 ? Direction::None : Direction::Path});
    }
    return rep;
}

std::vector<VertexId> select_generators(const CWSpace& space, const CellSet& cells,
                                        const std::vector<VertexId>& preferred) {
    Support s = support(space, cells);
    std::set<VertexId> gens;
    for (VertexId v : preferred) {
        if (s.vertices.contains(v)) gens.insert(v);
    }
    for (const Cycle& c : s.cycles) {
        bool covered = std::any_of(c.loop.begin(), c.loop.end(), [&](VertexId v) { return gens.contains(v); });
        if (!covered) gens.insert(*std::min_element(c.loop.begin(), c.loop.end()));
    }
    Graph g = make_graph(s.edges);
    for (const auto& piece : vertex_components(s.vertices, g)) {
        bool covered = std::any_of(piece.begin(), piece.end(), [&](VertexId v) { return gens.contains(v); });
        if (!covered) gens.insert(*piece.begin());
    }
    return {gens.begin(), gens.end()};
}

BettiNumbers betti(const CWSpace& space, const CellSet& cells, const FreeAbelianRep& rep) {
    std::set<VertexId> own = vertices_of(space, closure(space, cells));
    for (const MoveCertificate& c : rep.certificates) {
        if (!own.contains(c.vertex)) {
            throw Error(ErrorCode::Mismatch, "certificate for vertex " + std::to_string(c.vertex) +
                                                 " lies outside the complex");
        }
    }
    for (VertexId g : rep.generators) {
        if (!own.contains(g)) {
            throw Error(ErrorCode::Mismatch, "generator " + std::to_string(g) + " lies outside the complex");
        }
    }
    return {count_dim(space, cells, 2), rep.generators.size()};
}

bool verify_free(const FreeAbelianRep& rep) {
    std::set<VertexId> gens(rep.generators.begin(), rep.generators.end());
    if (gens.size() != rep.generators.size()) return false;
    std::set<VertexId> certified;
    for (const MoveCertificate& c : rep.certificates) {
        if (!certified.insert(c.vertex).second) return false;
    }
    Graph g = make_graph(rep.edges);
    std::map<VertexId, std::map<VertexId, int>> dist;
    for (VertexId gen : gens) dist[gen] = bfs(g, gen);
    for (const MoveCertificate& c : rep.certificates) {
        if (!gens.contains(c.generator)) return false;
        if ((c.k == 0) != (c.vertex == c.generator)) return false;
        int minimal = std::numeric_limits<int>::max();
        VertexId nearest = 0;
        for (VertexId gen : gens) {
            auto it = dist[gen].find(c.vertex);
            if (it != dist[gen].end() && it->second < minimal) {
                minimal = it->second;
                nearest = gen;
            }
        }
        if (minimal == std::numeric_limits<int>::max()) return false;
        if (c.k != minimal) return false;
        if (dist[c.generator].count(c.vertex) == 0 || dist[c.generator][c.vertex] != c.k) return false;
        if (rep.generators.size() > 1 && c.generator != nearest) return false;
    }
    return true;
}

} // namespace proxima
