#include "support.hpp"

#include "proxima/error.hpp"

#include <gtest/gtest.h>

using namespace proxima;
using namespace proxima::test;

namespace {

const ProbeFunction& beta0() {
    static const ProbeFunction p = ProbeFunction::builtin("beta0");
    return p;
}

std::vector<CellId> fan_triangles(const CWSpace& s) {
    auto t = cells_of_dim(s, s.complex("shE").cells, 2);
    return {t.begin(), t.end()};
}

} // namespace

TEST(Near, SharedVertexTriangles) {
    const CWSpace& s = fixture("fig1a").space;
    auto t = fan_triangles(s);
    ASSERT_EQ(t.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        CellSet rest;
        for (std::size_t j = 0; j < 3; ++j) {
            if (j != i) rest.insert(t[j]);
        }
        EXPECT_TRUE(near(s, CellSet{t[i]}, rest));
    }
    EXPECT_FALSE(near(s, CellSet{t[0]}, CellSet{}));
    EXPECT_FALSE(near(s, CellSet{}, CellSet{}));
}

TEST(Near, OppositeCornersAreFar) {
    CWSpace s = two_triangles();
    EXPECT_FALSE(near(s, "left", "right"));
    EXPECT_TRUE(near(s, "left", "both"));
    // oracle: disjoint closures
    EXPECT_TRUE(set_intersection(closure(s, "left"), closure(s, "right")).empty());
}

TEST(Describe, Builtins) {
    const CWSpace& s = fixture("fig1a").space;
    EXPECT_EQ(describe(s, s.complex("shE"), beta0()).values, std::vector<double>{3});
    EXPECT_EQ(describe(s, CellComplex{}, beta0()).values, std::vector<double>{0});
    CWSpace tri = single_triangle();
    EXPECT_EQ(describe(tri, tri.complex("tri"), ProbeFunction::builtin("vertex_count")).values,
              std::vector<double>{3});
    EXPECT_EQ(describe(tri, tri.complex("tri"), ProbeFunction::builtin("cell_count")).values,
              std::vector<double>{7});
    Description len = describe(tri, tri.complex("tri"), ProbeFunction::builtin("contour_length"));
    EXPECT_NEAR(len.values[0], 12.0, 1e-12);
    ProbeFunction pair = ProbeFunction::builtin("beta0,vertex_count");
    EXPECT_EQ(pair.arity(), 2u);
    EXPECT_EQ(describe(tri, tri.complex("tri"), pair).values, (std::vector<double>{1, 3}));
    EXPECT_THROW((void)ProbeFunction::builtin("colour"), Error);
}

TEST(Describe, Tolerance) {
    Description a{{1.0}, {false}}, b{{1.0 + 1e-12}, {false}}, c{{1.1}, {false}};
    EXPECT_TRUE(same_description(a, b));
    EXPECT_FALSE(same_description(a, c));
    Description i{{2}, {true}}, j{{2}, {true}};
    EXPECT_TRUE(same_description(i, j));
}

TEST(DescriptiveIntersection, CrossSpaceFans) {
    const CWSpace& k = fixture("fig1a").space;
    const CWSpace& kp = fixture("fig1b").space;
    auto common = descriptive_intersection(k, k.complex("shE").cells, kp, kp.complex("shE_prime").cells, beta0(), false);
    EXPECT_FALSE(common.empty());
    EXPECT_TRUE(dnear(k, k.complex("shE").cells, kp, kp.complex("shE_prime").cells, beta0(), false));
    try {
        (void)descriptive_intersection(k, k.complex("shE").cells, kp, kp.complex("shE_prime").cells, beta0(), true);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SpaceMismatch);
    }
    EXPECT_THROW((void)dnear(k, {}, kp, {}, beta0(), true), Error);
}

TEST(DescriptiveIntersection, EmptyAndSelf) {
    const CWSpace& s = fixture("fig1a").space;
    CellSet a = s.complex("shE").cells;
    EXPECT_TRUE(descriptive_intersection(s, a, s, {}, beta0(), true).empty());
    auto self = descriptive_intersection(s, a, s, a, beta0(), true);
    CellSet cells;
    for (const ElementRef& r : self) cells.insert(r.cell);
    EXPECT_EQ(cells, a);
}

TEST(Dnear, DifferentTriangleCountsAreFar) {
    CWSpace s = registry_space();
    CellSet pair = s.complex("pair").cells;
    ASSERT_EQ(count_dim(s, pair, 2), 2u);
    ASSERT_EQ(count_dim(s, s.complex("shE").cells, 2), 3u);
    EXPECT_EQ(describe(s, s.complex("pair"), beta0()).values, std::vector<double>{2});
    EXPECT_FALSE(dnear(s, pair, s, s.complex("shE").cells, beta0(), true));
    EXPECT_TRUE(dnear(s, pair, s, pair, beta0(), true));
    EXPECT_TRUE(dnear(s, s.complex("shE_prime").cells, s, s.complex("shE").cells, beta0(), true));
}

TEST(Dnear, SymmetricReflexiveAndLemmaOnSamples) {
    for (const char* spec : {"beta0", "beta_alpha", "cell_count", "vertex_count", "contour_length"}) {
        ProbeFunction probe = ProbeFunction::builtin(spec);
        for (const std::string& name : {std::string("fig1a"), std::string("earrings"), std::string("fig4b")}) {
            const CWSpace& s = fixture(name).space;
            DescriptionTable table(s, probe);
            auto samples = random_complexes(s, 31, 30);
            for (const CellSet& a : samples) {
                if (!a.empty()) {
                    EXPECT_TRUE(dnear(table, a, table, a));
                }
                for (const CellSet& b : samples) {
                    bool ab = dnear(table, a, table, b);
                    EXPECT_EQ(ab, dnear(table, b, table, a));
                    EXPECT_EQ(ab, !descriptive_intersection(table, a, table, b, true).empty());
                }
            }
        }
    }
}

TEST(Dnear, SpatialAndDescriptiveAreIndependent) {
    CWSpace copy = fixture("fig1a").space;
    CellSet fan = copy.complex("shE").cells;
    // near but not descriptively near: the fan and a triangle of the frame sharing a vertex with it
    CellSet touching;
    for (CellId t : cells_of_dim(copy, copy.universe(), 2)) {
        if (!fan.contains(t) && touching.empty() && !set_intersection(closure(copy, CellSet{t}), fan).empty()) {
            touching = closure(copy, CellSet{t});
        }
    }
    ASSERT_FALSE(touching.empty());
    CellSet only_outside = set_difference(touching, fan);
    ASSERT_FALSE(only_outside.empty());
    EXPECT_TRUE(near(copy, fan, touching));
    ProbeFunction p = ProbeFunction::builtin("beta0");
    DescriptionTable table(copy, p);
    EXPECT_TRUE(near(copy, fan, only_outside));
    EXPECT_FALSE(dnear(table, fan, table, only_outside));
    // descriptively near but far: two frame triangles described alike, far apart
    const CWSpace& k = fixture("fig1a").space;
    const CWSpace& kp = fixture("fig1b").space;
    EXPECT_TRUE(dnear(k, k.complex("shE").cells, kp, kp.complex("shE_prime").cells, p, false));
    CWSpace two = two_triangles();
    DescriptionTable t2(two, p);
    EXPECT_FALSE(near(two, "left", "right"));
    EXPECT_TRUE(dnear(t2, two.complex("left").cells, t2, two.complex("right").cells));
}

TEST(DescriptiveClosure, Registries) {
    CWSpace tri = single_triangle();
    EXPECT_EQ(descriptive_closure(tri, "tri", beta0()), std::vector<std::string>{"tri"});
    DescriptionTable t(tri, beta0());
    EXPECT_TRUE(descriptive_closure(t, {}).empty());

    CWSpace merged = registry_space();
    auto names = descriptive_closure(merged, "shE", beta0());
    // oracle: complexes whose describe() equals that of shE, computed pairwise
    std::vector<std::string> expected;
    Description target = describe(merged, merged.complex("shE"), beta0());
    for (const auto& [name, c] : merged.complexes()) {
        if (same_description(describe(merged, c, beta0()), target)) expected.push_back(name);
    }
    EXPECT_EQ(expected, (std::vector<std::string>{"shE", "shE_prime"}));
    EXPECT_EQ(names, expected);
}

TEST(Axioms, BuiltinRelationPassesEverywhere) {
    for (const std::string& name : fixture_names()) {
        const CWSpace& s = fixture(name).space;
        AxiomReport r = check_cech_axioms(s, [&s](const CellSet& a, const CellSet& b) { return near(s, a, b); }, 300, 7);
        EXPECT_TRUE(r.passed()) << name;
        ASSERT_EQ(r.results.size(), 4u);
        EXPECT_EQ(r.at("P.0").trials, 300u);
    }
}

TEST(Axioms, AsymmetricRelationFailsP1) {
    CWSpace s = square_annulus();
    SpatialRelation rel = [&s](const CellSet& a, const CellSet& b) {
        return near(s, a, b) && *a.begin() < *b.begin();
    };
    AxiomReport r = check_cech_axioms(s, rel, 300, 7);
    EXPECT_FALSE(r.at("P.1").passed);
    EXPECT_EQ(r.at("P.1").witness.front(), '<');
    EXPECT_TRUE(r.at("P.0").passed);
}

TEST(Axioms, EverythingNearFailsP0) {
    CWSpace s = single_triangle();
    AxiomReport r = check_cech_axioms(s, [](const CellSet&, const CellSet&) { return true; }, 100, 1);
    EXPECT_FALSE(r.at("P.0").passed);
    EXPECT_THROW((void)check_cech_axioms(s, [](const CellSet&, const CellSet&) { return true; }, 0, 1), Error);
}

TEST(Axioms, DescriptiveEarrings) {
    const CWSpace& s = fixture("earrings").space;
    AxiomReport r = check_descriptive_axioms(s, beta0(), 1000, 7);
    for (const AxiomResult& a : r.results) EXPECT_TRUE(a.passed) << a.axiom << " " << a.witness;
    EXPECT_TRUE(r.at("dP.converse").passed);
    EXPECT_TRUE(r.at("dP.3").passed);
}

TEST(Axioms, UnstableProbeBreaksConverse) {
    auto counter = std::make_shared<int>(0);
    ProbeFunction unstable("unstable", 1, [counter](const CWSpace&, const CellComplex&) {
        return Description{{static_cast<double>((*counter)++)}, {true}};
    });
    AxiomReport r = check_descriptive_axioms(fixture("fig1a").space, unstable, 200, 7);
    EXPECT_FALSE(r.at("dP.converse").passed);
    EXPECT_FALSE(r.at("dP.converse").witness.empty());
}

TEST(Axioms, Deterministic) {
    const CWSpace& s = fixture("necklace").space;
    auto rel = [&s](const CellSet& a, const CellSet& b) { return near(s, a, b); };
    SubcomplexSampler x(s, 5), y(s, 5);
    for (int i = 0; i < 50; ++i) EXPECT_EQ(x.sample(), y.sample());
    EXPECT_EQ(check_cech_axioms(s, rel, 100, 3).results.size(), check_cech_axioms(s, rel, 100, 3).results.size());
}
