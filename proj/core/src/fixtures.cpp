#include "proxima/fixtures.hpp"

#include "proxima/builder.hpp"
#include "proxima/error.hpp"
#include "proxima/kernel.hpp"

#include <map>
#include <utility>

namespace proxima {

namespace {

// Points are given as exact "p/q" strings; repeated coordinates reuse the same vertex.
class Draft {
public:
    VertexId pt(std::string_view x, std::string_view y) {
        Point2 p{Rational::parse(x), Rational::parse(y)};
        if (auto it = ids_.find(p); it != ids_.end()) return it->second;
        VertexId id = next_++;
        ids_.emplace(p, id);
        builder_.add_point(id, p);
        return id;
    }

    Loop loop(std::initializer_list<std::pair<std::string_view, std::string_view>> coords) {
        Loop out;
        for (auto [x, y] : coords) out.push_back(pt(x, y));
        builder_.add_loop(out);
        return out;
    }

    Loop frame(std::string_view x0, std::string_view y0, std::string_view x1, std::string_view y1) {
        return loop({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
    }

    VertexId edge(VertexId a, VertexId b) {
        builder_.add_constraint(a, b);
        return a;
    }

    CWSpace build() const { return builder_.build(); }

private:
    SpaceBuilder builder_;
    std::map<Point2, VertexId> ids_;
    VertexId next_ = 0;
};

CellSet edge_closure(const CWSpace& space, VertexId a, VertexId b) {
    auto e = space.edge_cell(a, b);
    if (!e) throw Error(ErrorCode::InvalidCell, "fixture edge missing");
    return closure(space, {*e});
}

Loop p10(Draft& d) {
    return d.loop({{"0", "0"}, {"1", "1/2"}, {"2", "0"}, {"3", "1/2"}, {"3", "3/2"},
                   {"2", "2"}, {"1", "3/2"}, {"0", "2"}, {"-1", "3/2"}, {"-1", "1/2"}});
}

ShapeFixture triangle_fan(bool prime) {
    Draft d;
    Loop frame = d.loop({{"-5/4", "-1/4"}, {"5/2", "-1/4"}, {"13/4", "-1/4"}, {"13/4", "1/2"}, {"13/4", "3"},
                         {"-5/4", "3"}});
    d.edge(frame[1], frame[3]);
    VertexId v0 = d.pt("0", "1");
    VertexId a = prime ? d.pt("-4/5", "2") : d.pt("-3/10", "2");
    VertexId b = d.pt("1", "5/2");
    VertexId c = d.pt("37/20", "37/20");
    VertexId e = d.pt("59/20", "5/4");
    d.loop({{"0", "1"}, {prime ? "-4/5" : "-3/10", "2"}, {"1", "5/2"}, {"37/20", "37/20"}, {"59/20", "5/4"}});
    d.edge(v0, b);
    d.edge(v0, c);

    ShapeFixture f;
    f.name = prime ? "triangle_fan3_prime" : "triangle_fan3";
    f.space = d.build();
    CWSpace& s = f.space;
    CellSet fan;
    for (auto [p, q] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, e}}) {
        fan.insert(*s.triangle_cell(v0, p, q));
    }
    fan = closure(s, fan);
    f.shape = prime ? "shE_prime" : "shE";
    f.declared_generators = {v0};
    s.register_complex({f.shape, fan, f.declared_generators});

    // the corner triangle cut off at the lower right
    s.register_complex({"T", closure(s, {*s.triangle_cell(frame[1], frame[2], frame[3])}), {}});
    s.set_label(prime ? "v0_prime" : "v0", v0);
    s.set_label("a", a);
    s.set_label("b", b);
    s.set_label("c", c);
    s.set_label("d", e);
    f.expect_filled_cycle = true;
    return f;
}

ShapeFixture cycle_paths() {
    Draft d;
    d.frame("-4/5", "-3/2", "24/5", "9/5");
    Loop hex = d.loop({{"0", "0"}, {"1", "1"}, {"3", "1"}, {"4", "0"}, {"3", "-1"}, {"1", "-1"}});
    VertexId v0 = hex[0], v1 = hex[1], v2 = hex[2], v8 = hex[3], v4 = hex[4], v3 = hex[5];
    VertexId v5 = d.pt("9/5", "1/5");
    d.edge(v1, v5);
    d.edge(v5, v2);
    d.edge(v2, v4);
    d.edge(v4, v5);
    d.edge(v5, v3);

    ShapeFixture f;
    f.name = "cycle_paths_2";
    f.space = d.build();
    CWSpace& s = f.space;
    CellSet shape = polygon_region(s, {v0, v1, v2, v4, v3});
    shape = set_union(shape, edge_closure(s, v2, v8));
    shape = set_union(shape, edge_closure(s, v8, v4));
    f.shape = "shE";
    f.declared_generators = {v0};
    s.register_complex({"shE", shape, f.declared_generators});
    s.register_complex({"cycE_min_filled", polygon_region(s, {v0, v1, v5, v3}), {v0}});
    CellSet open_cycle = set_union(edge_closure(s, v2, v8), edge_closure(s, v8, v4));
    open_cycle = set_union(open_cycle, edge_closure(s, v2, v4));
    s.register_complex({"cycE_non_filled", open_cycle, {}});
    const std::pair<const char*, VertexId> names[] = {{"v0", v0}, {"v1", v1}, {"v2", v2}, {"v3", v3},
                                                      {"v4", v4}, {"v5", v5}, {"v8", v8}};
    for (auto [n, v] : names) s.set_label(n, v);
    f.expect_filled_cycle = false;
    return f;
}

ShapeFixture cycle_figure3a() {
    Draft d;
    d.frame("-5/4", "-1/4", "13/4", "3");
    Loop a = p10(d);
    ShapeFixture f;
    f.name = "cycle_figure3a";
    f.space = d.build();
    VertexId v0 = a[6];
    f.shape = "cycE";
    f.declared_generators = {v0};
    f.space.register_complex({"cycE", polygon_region(f.space, a), f.declared_generators});
    f.space.set_label("v0", v0);
    f.expect_filled_cycle = true;
    return f;
}

Loop inner_b(Draft& d, std::string_view start_y) {
    return d.loop({{"0", start_y}, {"1", "3/4"}, {"2", "1/4"}, {"5/2", "1/2"}, {"5/2", "3/4"},
                   {"2", "27/20"}, {"1", "5/4"}, {"0", "3/2"}, {"-11/20", "5/4"}, {"-11/20", "3/4"}});
}

ShapeFixture intersecting_cycles() {
    Draft d;
    d.frame("-5/4", "-1/4", "13/4", "3");
    Loop a = p10(d);
    Loop b = inner_b(d, "0");
    ShapeFixture f;
    f.name = "intersecting_cycles_3b";
    f.space = d.build();
    CWSpace& s = f.space;
    VertexId v0 = a[6], v0p = b[1], v = a[0];
    CellSet cyc_a = polygon_region(s, a);
    f.shape = "shE";
    f.declared_generators = {v0, v0p};
    s.register_complex({"shE", cyc_a, f.declared_generators});
    s.register_complex({"cycA", cyc_a, {v0}});
    s.register_complex({"cycB", polygon_region(s, b), {v0p}});
    s.set_label("v0", v0);
    s.set_label("v0_prime", v0p);
    s.set_label("v", v);
    f.expect_filled_cycle = true;
    return f;
}

ShapeFixture ribbon() {
    Draft d;
    d.frame("-5/4", "-1/4", "13/4", "3");
    Loop a = p10(d);
    Loop c = inner_b(d, "1/4");
    ShapeFixture f;
    f.name = "ribbon_4b";
    f.space = d.build();
    CWSpace& s = f.space;
    f.shape = "rbE";
    s.register_complex({"rbE", polygon_region(s, a, {c}), {}});
    s.register_complex({"cycA", polygon_region(s, a), {}});
    s.register_complex({"cycB", polygon_region(s, c), {}});
    f.expect_filled_cycle = false;
    return f;
}

ShapeFixture earrings() {
    Draft d;
    d.frame("-5/4", "-1/4", "7/2", "3");
    Loop lo = d.loop({{"0", "0"}, {"1/2", "1"}, {"0", "2"}, {"-1", "3/2"}, {"-1", "1/2"}});
    Loop li = d.loop({{"0", "1/2"}, {"1/2", "1"}, {"-11/20", "5/4"}, {"-11/20", "3/4"}});
    Loop ro = d.loop({{"3/2", "1"}, {"2", "0"}, {"3", "1/2"}, {"3", "3/2"}, {"2", "2"}});
    Loop ri = d.loop({{"3/2", "1"}, {"51/20", "5/4"}, {"51/20", "3/4"}, {"2", "1/2"}});
    VertexId v0 = lo[1], v0p = ro[0];
    d.edge(v0, v0p);

    ShapeFixture f;
    f.name = "hawaiian_earrings";
    f.space = d.build();
    CWSpace& s = f.space;
    CellSet left = polygon_region(s, lo, {li});
    CellSet right = polygon_region(s, ro, {ri});
    s.register_complex({"erE", left, {v0}});
    s.register_complex({"erE_prime", right, {v0p}});
    f.shape = "earrings";
    f.declared_generators = {v0, v0p};
    s.register_complex({"earrings", set_union(set_union(left, right), edge_closure(s, v0, v0p)),
                        f.declared_generators});
    s.set_label("v0", v0);
    s.set_label("v0_prime", v0p);
    f.expect_filled_cycle = false;
    return f;
}

ShapeFixture necklace() {
    Draft d;
    d.frame("-3/2", "-1/4", "7/2", "11/4");
    Loop a = p10(d);
    Loop b = d.loop({{"0", "1/4"}, {"1", "1/2"}, {"2", "1/4"}, {"3", "3/2"}, {"5/2", "5/4"},
                     {"2", "3/2"}, {"1", "5/4"}, {"0", "3/2"}, {"-11/20", "5/4"}, {"-1", "3/2"}});
    ShapeFixture f;
    f.name = "hawaiian_necklace";
    f.space = d.build();
    CWSpace& s = f.space;
    VertexId g = a[8], gp = a[4], v0p = a[1];
    f.shape = "HnE";
    f.declared_generators = {g, gp, v0p};
    s.register_complex({"HnE", polygon_region(s, a, {b}), f.declared_generators});
    s.set_label("g", g);
    s.set_label("g_prime", gp);
    s.set_label("v0_prime", v0p);
    (void)b;
    f.expect_filled_cycle = false;
    return f;
}

ShapeFixture butterfly() {
    Draft d;
    d.frame("-3/2", "-1/2", "7/2", "5/2");
    Loop lw = d.loop({{"0", "0"}, {"1", "1"}, {"0", "2"}, {"-1", "3/2"}, {"-1", "1/2"}});
    Loop lh = d.loop({{"0", "1/2"}, {"1", "1"}, {"-11/20", "5/4"}, {"-11/20", "3/4"}});
    Loop rw = d.loop({{"1", "1"}, {"2", "2"}, {"3", "3/2"}, {"3", "1/2"}, {"2", "0"}});
    Loop rh = d.loop({{"1", "1"}, {"51/20", "5/4"}, {"51/20", "3/4"}, {"2", "1/2"}});
    Loop hex = d.loop({{"1", "1"}, {"9/10", "4/5"}, {"9/10", "1/2"}, {"1", "3/10"}, {"11/10", "1/2"},
                       {"11/10", "4/5"}});
    VertexId v0 = lw[1];
    VertexId v1 = d.pt("4/5", "3/2");
    VertexId v2 = d.pt("6/5", "3/2");
    d.edge(v1, v0);
    d.edge(v2, v0);

    ShapeFixture f;
    f.name = "hawaiian_butterfly";
    f.space = d.build();
    CWSpace& s = f.space;
    CellSet wing_l = polygon_region(s, lw, {lh});
    CellSet wing_r = polygon_region(s, rw, {rh});
    CellSet body = polygon_region(s, hex);
    CellSet shape = set_union(set_union(wing_l, wing_r), body);
    shape = set_union(shape, set_union(edge_closure(s, v1, v0), edge_closure(s, v2, v0)));
    f.shape = "HbE";
    f.declared_generators = {v0, v1, v2};
    s.register_complex({"HbE", shape, f.declared_generators});
    s.register_complex({"wingL", wing_l, {v0}});
    s.register_complex({"wingR", wing_r, {v0}});
    s.register_complex({"body", body, {v0}});
    s.set_label("v0", v0);
    s.set_label("v1", v1);
    s.set_label("v2", v2);
    f.expect_filled_cycle = false;
    return f;
}

} // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{
        "triangle_fan3",    "triangle_fan3_prime", "cycle_paths_2",      "cycle_figure3a",    "intersecting_cycles_3b",
        "ribbon_4b",        "hawaiian_earrings",   "hawaiian_necklace",  "hawaiian_butterfly"};
    return names;
}

std::string canonical_fixture_name(std::string_view name) {
    static const std::map<std::string, std::string, std::less<>> aliases{
        {"fig1a", "triangle_fan3"},          {"fig1b", "triangle_fan3_prime"}, {"fig2", "cycle_paths_2"},
        {"fig3a", "cycle_figure3a"},         {"fig3b", "intersecting_cycles_3b"}, {"fig4b", "ribbon_4b"},
        {"earrings", "hawaiian_earrings"},   {"necklace", "hawaiian_necklace"}, {"butterfly", "hawaiian_butterfly"},
    };
    if (auto it = aliases.find(name); it != aliases.end()) return it->second;
    for (const std::string& n : fixture_names()) {
        if (n == name) return n;
    }
    throw Error(ErrorCode::NotFound, "unknown fixture '" + std::string(name) + "'");
}

ShapeFixture build_fixture(std::string_view name) {
    std::string id = canonical_fixture_name(name);
    if (id == "triangle_fan3") return triangle_fan(false);
    if (id == "triangle_fan3_prime") return triangle_fan(true);
    if (id == "cycle_paths_2") return cycle_paths();
    if (id == "cycle_figure3a") return cycle_figure3a();
    if (id == "intersecting_cycles_3b") return intersecting_cycles();
    if (id == "ribbon_4b") return ribbon();
    if (id == "hawaiian_earrings") return earrings();
    if (id == "hawaiian_necklace") return necklace();
    return butterfly();
}

} // namespace proxima
