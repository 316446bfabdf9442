#pragma once

#include "proxima/builder.hpp"
#include "proxima/fixtures.hpp"
#include "proxima/kernel.hpp"
#include "proxima/proximity.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <string>

namespace proxima::test {

inline const ShapeFixture& fixture(const std::string& name) {
    static std::map<std::string, ShapeFixture> cache;
    std::string id = canonical_fixture_name(name);
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, build_fixture(id)).first;
    return it->second;
}

inline Point2 pt(std::int64_t x, std::int64_t y, std::int64_t den = 1) { return {Rational(x, den), Rational(y, den)}; }

// One filled triangle (0,0) (4,0) (0,3).
inline CWSpace single_triangle() {
    SpaceBuilder b;
    b.add_point(0, pt(0, 0));
    b.add_point(1, pt(4, 0));
    b.add_point(2, pt(0, 3));
    b.add_loop({0, 1, 2});
    CWSpace s = b.build();
    s.register_complex({"tri", s.universe(), {0}});
    return s;
}

// Square frame [0,9]^2 with two small triangles far apart.
inline CWSpace two_triangles() {
    SpaceBuilder b;
    b.add_point(0, pt(0, 0));
    b.add_point(1, pt(9, 0));
    b.add_point(2, pt(9, 9));
    b.add_point(3, pt(0, 9));
    b.add_loop({0, 1, 2, 3});
    b.add_point(4, pt(1, 1));
    b.add_point(5, pt(3, 1));
    b.add_point(6, pt(1, 3));
    b.add_loop({4, 5, 6});
    b.add_point(7, pt(6, 6));
    b.add_point(8, pt(8, 6));
    b.add_point(9, pt(8, 8));
    b.add_loop({7, 8, 9});
    CWSpace s = b.build();
    CellSet left = polygon_region(s, {4, 5, 6});
    CellSet right = polygon_region(s, {7, 8, 9});
    s.register_complex({"left", left, {4}});
    s.register_complex({"right", right, {7}});
    s.register_complex({"both", set_union(left, right), {4, 7}});
    return s;
}

// Square [0,6]^2 around [2,4]^2; "outer" is the filled big square, "inner" the filled small one.
inline CWSpace square_annulus() {
    SpaceBuilder b;
    b.add_point(0, pt(0, 0));
    b.add_point(1, pt(6, 0));
    b.add_point(2, pt(6, 6));
    b.add_point(3, pt(0, 6));
    b.add_point(4, pt(2, 2));
    b.add_point(5, pt(4, 2));
    b.add_point(6, pt(4, 4));
    b.add_point(7, pt(2, 4));
    b.add_loop({0, 1, 2, 3});
    b.add_loop({4, 5, 6, 7});
    CWSpace s = b.build();
    s.register_complex({"outer", s.universe(), {0}});
    s.register_complex({"inner", polygon_region(s, {4, 5, 6, 7}), {4}});
    return s;
}

// Frame [0,30]x[0,10] holding two congruent filled pentagons (3 triangles each), a filled
// quadrilateral (2 triangles) and one triangle, registered as shE, shE_prime, pair and T.
inline CWSpace registry_space() {
    SpaceBuilder b;
    VertexId next = 0;
    auto loop = [&](std::initializer_list<std::pair<int, int>> coords) {
        Loop out;
        for (auto [x, y] : coords) {
            b.add_point(next, pt(x, y));
            out.push_back(next++);
        }
        b.add_loop(out);
        return out;
    };
    loop({{0, 0}, {30, 0}, {30, 10}, {0, 10}});
    Loop p1 = loop({{2, 3}, {5, 2}, {6, 5}, {4, 7}, {1, 6}});
    Loop p2 = loop({{9, 3}, {12, 2}, {13, 5}, {11, 7}, {8, 6}});
    Loop quad = loop({{16, 3}, {19, 3}, {19, 6}, {16, 6}});
    Loop tri = loop({{22, 3}, {25, 3}, {23, 6}});
    CWSpace s = b.build();
    s.register_complex({"shE", polygon_region(s, p1), {p1[0]}});
    s.register_complex({"shE_prime", polygon_region(s, p2), {p2[0]}});
    s.register_complex({"pair", polygon_region(s, quad), {quad[0]}});
    s.register_complex({"T", polygon_region(s, tri), {tri[0]}});
    return s;
}

// Star-shaped polygon with n vertices around the origin inside a large frame.
// Polygon vertices get ids 0..n-1 in counterclockwise order, the frame n..n+3.
inline CWSpace random_polygon(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> jitter(-0.2, 0.2);
    std::uniform_real_distribution<double> radius(3.0, 6.0);
    SpaceBuilder b;
    Loop loop;
    for (int i = 0; i < n; ++i) {
        double theta = 2 * std::numbers::pi * (i + 0.5 + jitter(rng)) / n;
        double r = radius(rng);
        auto x = static_cast<std::int64_t>(std::lround(r * std::cos(theta) * 64));
        auto y = static_cast<std::int64_t>(std::lround(r * std::sin(theta) * 64));
        b.add_point(i, pt(x, y, 64));
        loop.push_back(i);
    }
    b.add_loop(loop);
    b.add_point(n, pt(-10, -10));
    b.add_point(n + 1, pt(10, -10));
    b.add_point(n + 2, pt(10, 10));
    b.add_point(n + 3, pt(-10, 10));
    b.add_loop({n, n + 1, n + 2, n + 3});
    CWSpace s = b.build();
    s.register_complex({"poly", polygon_region(s, loop), {0}});
    return s;
}

// Closure computed from vertex sets alone: every cell whose vertices lie inside a cell of A.
inline CellSet closure_oracle(const CWSpace& s, const CellSet& a) {
    CellSet out;
    for (CellId id : a) {
        const Cell& big = s.cell(id);
        for (const auto& [cid, c] : s.cells()) {
            bool inside = true;
            for (VertexId v : c.vertices) {
                inside = inside && std::find(big.vertices.begin(), big.vertices.end(), v) != big.vertices.end();
            }
            if (inside) out.insert(cid);
        }
    }
    return out;
}

// Contour by incidence counting: edges of cl(A) bounding at most one 2-cell of cl(A), their
// endpoints, and vertices of cl(A) with no edge in cl(A).
inline CellSet contour_oracle(const CWSpace& s, const CellSet& a) {
    CellSet cl = closure_oracle(s, a);
    std::map<CellId, int> incidence;
    for (CellId id : cl) {
        const Cell& c = s.cell(id);
        if (c.dim != 2) continue;
        for (std::size_t i = 0; i < 3; ++i) {
            incidence[*s.edge_cell(c.vertices[i], c.vertices[(i + 1) % 3])]++;
        }
    }
    CellSet out;
    std::set<VertexId> touched;
    for (CellId id : cl) {
        const Cell& c = s.cell(id);
        if (c.dim != 1) continue;
        touched.insert(c.vertices.begin(), c.vertices.end());
        if (incidence[id] <= 1) {
            out.insert(id);
            for (VertexId v : c.vertices) out.insert(*s.vertex_cell(v));
        }
    }
    for (CellId id : cl) {
        const Cell& c = s.cell(id);
        if (c.dim == 0 && !touched.contains(c.vertices[0])) out.insert(id);
    }
    return out;
}

inline std::vector<CellSet> random_complexes(const CWSpace& s, std::uint64_t seed, std::size_t count) {
    SubcomplexSampler sampler(s, seed);
    std::vector<CellSet> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.sample());
    return out;
}

} // namespace proxima::test
