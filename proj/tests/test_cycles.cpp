#include "support.hpp"

#include "proxima/cycles.hpp"
#include "proxima/error.hpp"

#include <gtest/gtest.h>

using namespace proxima;
using namespace proxima::test;

namespace {

// Every loop vertex meets exactly two loop edges and consecutive vertices share an edge of the space.
void expect_simple_closed(const CWSpace& s, const Cycle& c) {
    std::set<VertexId> distinct(c.loop.begin(), c.loop.end());
    EXPECT_EQ(distinct.size(), c.loop.size());
    EXPECT_GE(c.loop.size(), 3u);
    std::map<VertexId, int> degree;
    for (std::size_t i = 0; i < c.loop.size(); ++i) {
        VertexId a = c.loop[i], b = c.loop[(i + 1) % c.loop.size()];
        EXPECT_TRUE(s.edge_cell(a, b).has_value());
        degree[a]++;
        degree[b]++;
    }
    for (const auto& [v, d] : degree) EXPECT_EQ(d, 2) << v;
}

Cycle find_cycle(const std::vector<Cycle>& cycles, std::size_t length) {
    for (const Cycle& c : cycles) {
        if (c.loop.size() == length) return c;
    }
    ADD_FAILURE() << "no cycle of length " << length;
    return {};
}

} // namespace

TEST(Cycles, SingleTriangle) {
    CWSpace s = single_triangle();
    auto cycles = extract_cycles(s, s.universe());
    ASSERT_EQ(cycles.size(), 1u);
    EXPECT_TRUE(cycles[0].filled);
    EXPECT_EQ(cycles[0].interior, (CellSet{*s.triangle_cell(0, 1, 2)}));
}

TEST(Cycles, TenVertexCycle) {
    const ShapeFixture& f = fixture("fig3a");
    auto cycles = extract_cycles(f.space, f.space.complex("cycE").cells);
    ASSERT_EQ(cycles.size(), 1u);
    EXPECT_EQ(cycles[0].loop.size(), 10u);
    EXPECT_TRUE(cycles[0].filled);
    VertexId v0 = f.space.resolve_vertex("v0");
    EXPECT_NE(std::find(cycles[0].loop.begin(), cycles[0].loop.end(), v0), cycles[0].loop.end());
}

TEST(Cycles, FilledAndNonFilled) {
    const ShapeFixture& f = fixture("fig2");
    const CWSpace& s = f.space;
    auto cycles = extract_cycles(s, s.complex("shE").cells);
    ASSERT_EQ(cycles.size(), 3u);
    Cycle min_filled = find_cycle(cycles, 4);
    Cycle open = find_cycle(cycles, 3);
    EXPECT_TRUE(is_filled_cycle(s, min_filled));
    EXPECT_FALSE(is_filled_cycle(s, open));
    EXPECT_EQ(std::set<VertexId>(open.loop.begin(), open.loop.end()),
              (std::set<VertexId>{s.resolve_vertex("v2"), s.resolve_vertex("v8"), s.resolve_vertex("v4")}));
    // the open triangle's inside lies in the boundary region of the shape
    CellSet outside = boundary_region(s, s.complex("shE").cells);
    auto tri = s.triangle_cell(s.resolve_vertex("v2"), s.resolve_vertex("v8"), s.resolve_vertex("v4"));
    ASSERT_TRUE(tri.has_value());
    EXPECT_TRUE(outside.contains(*tri));
}

TEST(Cycles, BareLoopIsNotFilled) {
    CWSpace s = single_triangle();
    CellSet edges = cells_of_dim(s, s.universe(), 1);
    Cycle c = make_cycle(s, closure(s, edges), {0, 1, 2});
    EXPECT_FALSE(is_filled_cycle(s, c));
    auto cycles = extract_cycles(s, closure(s, edges));
    ASSERT_EQ(cycles.size(), 1u);
    EXPECT_FALSE(cycles[0].filled);
}

TEST(Cycles, EmptyForAcyclic) {
    CWSpace s = single_triangle();
    EXPECT_TRUE(extract_cycles(s, closure(s, CellSet{*s.edge_cell(0, 1)})).empty());
    EXPECT_TRUE(extract_cycles(s, {}).empty());
}

TEST(Cycles, PropertiesOnAllFixtures) {
    for (const std::string& name : fixture_names()) {
        const CWSpace& s = fixture(name).space;
        for (const auto& [cname, cx] : s.complexes()) {
            auto first = extract_cycles(s, cx.cells);
            auto second = extract_cycles(s, cx.cells);
            ASSERT_EQ(first.size(), second.size());
            for (std::size_t i = 0; i < first.size(); ++i) {
                EXPECT_EQ(first[i].loop, second[i].loop);
                expect_simple_closed(s, first[i]);
                EXPECT_EQ(first[i].filled, is_filled_cycle(s, first[i]));
            }
            for (std::size_t i = 1; i < first.size(); ++i) {
                auto key = [](const Cycle& c) {
                    return std::pair{*std::min_element(c.loop.begin(), c.loop.end()), c.loop.size()};
                };
                EXPECT_LE(key(first[i - 1]), key(first[i]));
            }
        }
    }
}

TEST(ShapeClosure, FilledCycleVerdicts) {
    EXPECT_TRUE(shape_closure_is_filled_cycle(fixture("fig1a").space, fixture("fig1a").space.complex("shE").cells).value);
    EXPECT_TRUE(shape_closure_is_filled_cycle(fixture("fig3a").space, fixture("fig3a").space.complex("cycE").cells).value);
    CWSpace s = two_triangles();
    auto r = shape_closure_is_filled_cycle(s, s.complex("both").cells);
    EXPECT_FALSE(r.value);
    EXPECT_FALSE(r.diagnostic.empty());
}

TEST(ShapeClosure, AgreesWithFixtureMetadata) {
    for (const std::string& name : fixture_names()) {
        const ShapeFixture& f = fixture(name);
        EXPECT_EQ(shape_closure_is_filled_cycle(f.space, f.space.complex(f.shape).cells).value, f.expect_filled_cycle)
            << name;
    }
}

TEST(Ribbon, FigureRibbon) {
    const CWSpace& s = fixture("fig4b").space;
    Cycle outer = extract_cycles(s, s.complex("cycA").cells).at(0);
    Cycle inner = extract_cycles(s, s.complex("cycB").cells).at(0);
    Ribbon rb = make_ribbon(s, outer, inner);
    EXPECT_EQ(rb.body, closure(s, "rbE"));
    EXPECT_EQ(components(s, boundary_region(s, rb.body)).size(), 2u);
    // both loops are kept in the body
    EXPECT_TRUE(is_subset(outer.loop_cells(s), rb.body));
    EXPECT_TRUE(is_subset(inner.loop_cells(s), rb.body));
    EXPECT_TRUE(set_intersection(rb.body, inner.interior).empty());
    EXPECT_EQ(set_union(rb.body, boundary_region(s, rb.body)), s.universe());
}

TEST(Ribbon, DegenerateAndDisjoint) {
    const CWSpace& s = fixture("fig4b").space;
    Cycle outer = extract_cycles(s, s.complex("cycA").cells).at(0);
    try {
        (void)make_ribbon(s, outer, outer);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotNested);
    }
    CWSpace two = two_triangles();
    Cycle a = extract_cycles(two, two.complex("left").cells).at(0);
    Cycle b = extract_cycles(two, two.complex("right").cells).at(0);
    EXPECT_THROW((void)make_ribbon(two, a, b), Error);
}

TEST(Ribbon, SquareAnnulusBody) {
    CWSpace s = square_annulus();
    Cycle outer = extract_cycles(s, s.complex("outer").cells).at(0);
    Cycle inner = extract_cycles(s, s.complex("inner").cells).at(0);
    Ribbon rb = make_ribbon(s, outer, inner);
    // oracle: everything except the cells strictly inside the small square
    CellSet strict_inner = interior(s, s.complex("inner").cells);
    EXPECT_EQ(rb.body.size(), s.cells().size() - strict_inner.size());
    EXPECT_EQ(rb.body, set_difference(s.universe(), strict_inner));
    EXPECT_EQ(components(s, boundary_region(s, rb.body)).size(), 1u);
    EXPECT_EQ(contour(s, rb.body).loops.size(), 2u);
}

TEST(Fixtures, DeclaredGenerators) {
    EXPECT_EQ(fixture("hawaiian_earrings").declared_generators.size(), 2u);
    const ShapeFixture& n = fixture("hawaiian_necklace");
    EXPECT_EQ(n.declared_generators,
              (std::vector<VertexId>{n.space.resolve_vertex("g"), n.space.resolve_vertex("g_prime"),
                                     n.space.resolve_vertex("v0_prime")}));
    const ShapeFixture& b = fixture("hawaiian_butterfly");
    EXPECT_EQ(b.declared_generators, (std::vector<VertexId>{b.space.resolve_vertex("v0"), b.space.resolve_vertex("v1"),
                                                            b.space.resolve_vertex("v2")}));
    EXPECT_THROW((void)build_fixture("no_such_fixture"), Error);
    EXPECT_EQ(canonical_fixture_name("fig3b"), "intersecting_cycles_3b");
}
