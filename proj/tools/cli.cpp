#include "cli.hpp"

#include "proxima/algebra.hpp"
#include "proxima/cycles.hpp"
#include "proxima/document.hpp"
#include "proxima/error.hpp"
#include "proxima/fixed_sets.hpp"
#include "proxima/fixtures.hpp"
#include "proxima/kernel.hpp"
#include "proxima/proximity.hpp"
#include "proxima/render.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

namespace proxima::cli {

namespace {

namespace fs = std::filesystem;

const char* boolean(bool v) { return v ? "true" : "false"; }

std::string number(double v) {
    if (std::abs(v) < 1e15 && v == std::floor(v)) return std::to_string(static_cast<long long>(v));
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string join(const std::vector<VertexId>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
    return out;
}

struct Source {
    std::shared_ptr<const SpaceDocument> doc;
    std::string label;
    std::string complex_name;

    const CWSpace& space() const { return doc->space; }
    CellComplex complex() const { return doc->space.complex(complex_name); }
};

// Documents are shared between tokens naming the same file or fixture, so
// two complexes of one document are compared within a single space.
class Workspace {
public:
    Source resolve(const std::string& token, const std::string& complex_override = {}) {
        std::string base = token;
        std::string complex = complex_override;
        if (!fs::exists(base)) {
            if (auto colon = token.rfind(':'); colon != std::string::npos) {
                base = token.substr(0, colon);
                complex = token.substr(colon + 1);
            }
        }
        Source src;
        src.doc = load(base);
        src.label = fs::exists(base) ? fs::path(base).filename().string() : canonical_fixture_name(base);
        src.complex_name = complex.empty() ? src.doc->default_complex : complex;
        if (src.complex_name.empty()) {
            throw Error(ErrorCode::InvalidArgument, "no complex given and " + src.label + " has no default");
        }
        src.doc->space.complex(src.complex_name);
        return src;
    }

    std::shared_ptr<const SpaceDocument> load(const std::string& base) {
        if (auto it = docs_.find(base); it != docs_.end()) return it->second;
        auto doc = std::make_shared<SpaceDocument>(fs::exists(base) ? load_document(base) : fixture_document(base));
        docs_.emplace(base, doc);
        return doc;
    }

private:
    std::map<std::string, std::shared_ptr<const SpaceDocument>> docs_;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PROXIMA_SEED")) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), v);
        if (ec == std::errc() && *ptr == '\0') return v;
    }
    return 1;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case ErrorCode::NotNested:
    case ErrorCode::NotOnCycle:
    case ErrorCode::UncoveredCycle:
    case ErrorCode::Mismatch:
    case ErrorCode::EmptyBoundary:
    case ErrorCode::NotTotal:
        return kExitFailed;
    default:
        return kExitUsage;
    }
}

void print_axioms(std::ostream& out, const AxiomReport& report) {
    for (const AxiomResult& r : report.results) {
        if (r.passed) {
            out << r.axiom << " pass (" << r.trials << " trials)\n";
        } else {
            out << r.axiom << " FAIL witness=" << r.witness << '\n';
        }
    }
}

SpatialRelation injected_relation(const CWSpace& space, const std::string& kind) {
    if (kind == "asymmetric") {
        return [&space](const CellSet& a, const CellSet& b) {
            return near(space, a, b) && *a.begin() <= *b.begin();
        };
    }
    if (kind == "disjoint") {
        return [&space](const CellSet& a, const CellSet& b) {
            return near(space, a, b) && set_intersection(a, b).empty();
        };
    }
    if (kind == "empty_near") {
        return [](const CellSet&, const CellSet&) { return true; };
    }
    throw Error(ErrorCode::InvalidArgument, "unknown injection '" + kind + "'");
}

// Returns a fresh value on every call, so two description tables disagree.
ProbeFunction unstable_probe() {
    auto counter = std::make_shared<int>(0);
    return ProbeFunction("unstable", 1, [counter](const CWSpace&, const CellComplex&) {
        return Description{{static_cast<double>((*counter)++)}, {true}};
    });
}

struct Options {
    std::string probe = "beta0";
    std::string map = "boundary_complement";
    std::string mode = "existential";
    std::string out_file;
    std::string inject;
    std::string generators;
    std::vector<std::string> positional;
    std::size_t trials = 1000;
    std::uint64_t seed = 7;
    double th = 0;
    bool strict = false;
};

Source one_source(Workspace& ws, const Options& o) {
    if (o.positional.empty()) throw Error(ErrorCode::InvalidArgument, "missing source");
    if (o.positional.size() > 2) throw Error(ErrorCode::InvalidArgument, "too many arguments");
    return ws.resolve(o.positional[0], o.positional.size() == 2 ? o.positional[1] : std::string());
}

std::pair<Source, Source> two_sources(Workspace& ws, const Options& o) {
    if (o.positional.size() != 2) throw Error(ErrorCode::InvalidArgument, "expected two sources");
    return {ws.resolve(o.positional[0]), ws.resolve(o.positional[1])};
}

void write_or_print(const std::string& text, const Options& o, std::ostream& out) {
    if (o.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out_file, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.out_file);
    file << text;
}

int cmd_validate(Workspace& ws, const Options& o, std::ostream& out) {
    if (o.positional.size() != 1) throw Error(ErrorCode::InvalidArgument, "expected one source");
    const std::string& token = o.positional[0];
    auto doc = ws.load(token);
    const CWSpace& s = doc->space;
    CWReport report = verify_cw_conditions(s);
    out << "space=" << (fs::exists(token) ? fs::path(token).filename().string() : canonical_fixture_name(token)) << '\n';
    out << "vertices=" << s.vertices().size() << " cells=" << s.cells().size()
        << " complexes=" << s.complexes().size() << '\n';
    out << "containment=" << boolean(report.containment) << '\n';
    out << "intersection=" << boolean(report.intersection) << '\n';
    out << "hausdorff=" << boolean(report.hausdorff) << '\n';
    for (const std::string& note : report.notes) out << "note=" << note << '\n';
    return report.accepted() ? kExitOk : kExitFailed;
}

int cmd_betti(Workspace& ws, const Options& o, std::ostream& out) {
    Source src = one_source(ws, o);
    CellComplex a = src.complex();
    std::vector<VertexId> preferred = a.generators;
    if (!o.generators.empty()) {
        preferred.clear();
        std::stringstream list(o.generators);
        for (std::string item; std::getline(list, item, ',');) preferred.push_back(src.space().resolve_vertex(item));
    }
    CellSet cl = closure(src.space(), a.cells);
    std::vector<VertexId> gens = o.strict ? preferred : select_generators(src.space(), cl, preferred);
    FreeAbelianRep rep = free_fg_rep(src.space(), cl, gens);
    BettiNumbers b = betti(src.space(), a.cells, rep);
    out << "beta0=" << b.beta0 << " beta_alpha=" << b.beta_alpha << '\n';
    return kExitOk;
}

int cmd_boundary(Workspace& ws, const Options& o, std::ostream& out) {
    Source src = one_source(ws, o);
    const CWSpace& s = src.space();
    CellSet cells = src.complex().cells;
    CellSet cl = closure(s, cells);
    Contour bdy = contour(s, cl);
    CellSet outside = boundary_region(s, cells);
    out << "complex=" << src.complex_name << '\n';
    out << "closure=" << cl.size() << '\n';
    out << "interior=" << interior(s, cl).size() << '\n';
    out << "contour=" << bdy.cells.size() << '\n';
    out << "contour_loops=" << bdy.loops.size() << '\n';
    for (const Loop& loop : bdy.loops) out << "loop=" << join(loop) << '\n';
    out << "boundary_region=" << outside.size() << '\n';
    out << "boundary_components=" << components(s, outside).size() << '\n';
    out << "partition=" << boolean(jordan_partition_check(s, cells)) << '\n';
    return kExitOk;
}

int cmd_cycles(Workspace& ws, const Options& o, std::ostream& out) {
    Source src = one_source(ws, o);
    auto cycles = extract_cycles(src.space(), src.complex().cells);
    out << "cycles=" << cycles.size() << '\n';
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        out << "cycle=" << i << " length=" << cycles[i].loop.size() << " filled=" << boolean(cycles[i].filled)
            << " loop=" << join(cycles[i].loop) << '\n';
    }
    auto verdict = shape_closure_is_filled_cycle(src.space(), src.complex().cells);
    out << "filled_cycle_shape=" << boolean(verdict.value) << " (" << verdict.diagnostic << ")\n";
    return kExitOk;
}

int cmd_axioms(Workspace& ws, const Options& o, std::ostream& out) {
    if (o.trials == 0) throw Error(ErrorCode::InvalidArgument, "--trials must be at least 1");
    std::vector<std::string> tokens = o.positional;
    if (tokens.empty()) tokens = fixture_names();
    bool all = true;
    for (const std::string& token : tokens) {
        auto doc = ws.load(token);
        const CWSpace& s = doc->space;
        out << "space=" << (fs::exists(token) ? fs::path(token).filename().string() : canonical_fixture_name(token))
            << '\n';
        bool descriptive_only = o.inject == "unstable_probe";
        bool cech_only = !o.inject.empty() && !descriptive_only;
        if (!descriptive_only) {
            SpatialRelation rel = o.inject.empty()
                                      ? SpatialRelation([&s](const CellSet& a, const CellSet& b) { return near(s, a, b); })
                                      : injected_relation(s, o.inject);
            AxiomReport r = check_cech_axioms(s, rel, o.trials, o.seed);
            print_axioms(out, r);
            all = all && r.passed();
        }
        if (!cech_only) {
            ProbeFunction probe = descriptive_only ? unstable_probe() : resolve_probe(*doc, o.probe);
            AxiomReport r = check_descriptive_axioms(s, probe, o.trials, o.seed);
            print_axioms(out, r);
            all = all && r.passed();
        }
    }
    return all ? kExitOk : kExitFailed;
}

int cmd_fixed(Workspace& ws, const Options& o, std::ostream& out) {
    Source src = one_source(ws, o);
    const CWSpace& s = src.space();
    DpcMap map = resolve_map(*src.doc, o.map);
    ProbeFunction probe = resolve_probe(*src.doc, o.probe);
    if (o.mode != "existential" && o.mode != "universal") {
        throw Error(ErrorCode::InvalidArgument, "--mode must be existential or universal");
    }
    CellComplex a = src.complex();
    FixedSetReport r = fixed_set_report(map, s, a, probe);
    out << "subject=" << r.subject << '\n';
    out << "map=" << map.name << '\n';
    out << "probe=" << probe.name() << '\n';
    out << "dpc_existential=" << boolean(r.dpc_existential) << '\n';
    out << "dpc_universal=" << boolean(r.dpc_universal) << '\n';
    out << "descriptive_fixed=" << boolean(r.descriptive_fixed) << '\n';
    out << "amiable=" << boolean(r.amiable) << '\n';
    if (r.witness) out << "witness=" << r.witness->cell << '\n';
    out << "image_equals_closure=" << boolean(apply(map, s, a).cells == closure(s, a.cells)) << '\n';
    out << "fixed_cell_complex=" << boolean(fixed_cell_complex_check(s, map, probe).value) << '\n';
    try {
        BoundaryFixedResult b = shape_boundary_fixed_check(s, a.cells, probe);
        out << "shape_boundary_fixed=" << boolean(b.fixed) << '\n';
        out << "shape_boundary_amiable=" << boolean(b.amiable) << '\n';
        out << "shape_boundary_closed_up=" << boolean(b.closed_up) << '\n';
    } catch (const Error& e) {
        if (e.code() != ErrorCode::EmptyBoundary) throw;
        out << "shape_boundary_fixed=empty\n";
    }
    bool dpc = o.mode == "existential" ? r.dpc_existential : r.dpc_universal;
    return dpc && r.descriptive_fixed && r.amiable ? kExitOk : kExitFailed;
}

int cmd_amiable(Workspace& ws, const Options& o, std::ostream& out) {
    if (o.positional.empty() || o.positional.size() > 2) throw Error(ErrorCode::InvalidArgument, "expected one or two sources");
    Source a = ws.resolve(o.positional[0]);
    Source b = o.positional.size() == 2 ? ws.resolve(o.positional[1]) : a;
    DpcMap map = resolve_map(*a.doc, o.map);
    ProbeFunction probe = resolve_probe(*a.doc, o.probe);
    AmiableResult r = amiable(map, a.space(), a.complex(), b.space(), b.complex(), probe);
    if (r.value) {
        out << "true (witness=" << (r.witness->side == 0 ? a.label : b.label) << ":" << r.witness->cell
            << " overlap=" << r.overlap << ")\n";
    } else {
        out << "false (overlap=0)\n";
    }
    return r.value ? kExitOk : kExitFailed;
}

int cmd_almost_amiable(Workspace& ws, const Options& o, std::ostream& out) {
    auto [a, b] = two_sources(ws, o);
    DpcMap map = resolve_map(*a.doc, o.map);
    ProbeFunction probe = resolve_probe(*a.doc, o.probe);
    AlmostAmiableResult r = almost_amiable(a.space(), a.complex(), b.space(), b.complex(), map, probe, o.th);
    out << boolean(r.value) << " (|" << number(r.first) << "-" << number(r.second) << "|=" << number(r.difference)
        << ")\n";
    return r.value ? kExitOk : kExitFailed;
}

int cmd_dnear(Workspace& ws, const Options& o, std::ostream& out) {
    auto [a, b] = two_sources(ws, o);
    ProbeFunction probe = resolve_probe(*a.doc, o.probe);
    bool same = a.doc == b.doc;
    bool value = dnear(a.space(), a.complex().cells, b.space(), b.complex().cells, probe, same);
    auto common = descriptive_intersection(a.space(), a.complex().cells, b.space(), b.complex().cells, probe, same);
    out << boolean(value) << " (" << (same ? "same space" : "cross space") << ", shared=" << common.size() << ")\n";
    return value ? kExitOk : kExitFailed;
}

int cmd_render(Workspace& ws, const Options& o, std::ostream& out) {
    Source src = one_source(ws, o);
    write_or_print(render_svg(src.space(), src.complex_name), o, out);
    return kExitOk;
}

int cmd_fixture(Workspace&, const Options& o, std::ostream& out) {
    if (o.positional.size() != 1) throw Error(ErrorCode::InvalidArgument, "expected one fixture name");
    write_or_print(serialize(fixture_document(o.positional[0])), o, out);
    return kExitOk;
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CommandResult result;
    std::ostringstream out, err;
    Options o;
    o.seed = default_seed();

    CLI::App app{"Descriptive proximity tools for finite planar CW spaces", "proxima"};
    app.require_subcommand(1, 1);

    using Handler = int (*)(Workspace&, const Options&, std::ostream&);
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const std::string& name, const std::string& help, Handler h, const std::string& pos_help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("args", o.positional, pos_help);
        commands.emplace_back(sub, h);
        return sub;
    };

    add("validate", "Check the CW conditions of a space", cmd_validate, "SOURCE");
    auto* betti_cmd = add("betti", "Print beta0 and beta_alpha of a complex", cmd_betti, "SOURCE [COMPLEX]");
    betti_cmd->add_option("--probe", o.probe, "Probe name (accepted for symmetry with other commands)");
    betti_cmd->add_option("--generators", o.generators, "Comma separated generator labels or vertex ids");
    betti_cmd->add_flag("--strict", o.strict, "Use the generators as given, without completing them");
    add("boundary", "Closure, contour and boundary region of a complex", cmd_boundary, "SOURCE [COMPLEX]");
    add("cycles", "List the cycles of a complex", cmd_cycles, "SOURCE [COMPLEX]");
    auto* axioms_cmd = add("axioms", "Check the proximity axioms on random subcomplexes", cmd_axioms, "[SOURCE...]");
    axioms_cmd->add_option("--trials", o.trials, "Number of sampled triples")->capture_default_str();
    axioms_cmd->add_option("--seed", o.seed, "Random seed (default from PROXIMA_SEED)");
    axioms_cmd->add_option("--probe", o.probe, "Probe for the descriptive axioms")->capture_default_str();
    axioms_cmd->add_option("--inject", o.inject, "Deliberately broken relation")
        ->check(CLI::IsMember({"asymmetric", "disjoint", "empty_near", "unstable_probe"}));
    auto* fixed_cmd = add("fixed", "Fixed set report for a complex", cmd_fixed, "SOURCE [COMPLEX]");
    fixed_cmd->add_option("--map", o.map, "Map name or kind")->capture_default_str();
    fixed_cmd->add_option("--probe", o.probe, "Probe name")->capture_default_str();
    fixed_cmd->add_option("--mode", o.mode, "existential or universal")->capture_default_str();
    auto* amiable_cmd = add("amiable", "Whether f(A) and B share a description", cmd_amiable, "SOURCE [SOURCE]");
    amiable_cmd->add_option("--map", o.map, "Map name or kind")->capture_default_str();
    amiable_cmd->add_option("--probe", o.probe, "Probe name")->capture_default_str();
    auto* almost_cmd = add("almost-amiable", "Compare scalar descriptions of two images", cmd_almost_amiable,
                           "SOURCE SOURCE");
    almost_cmd->add_option("--map", o.map, "Map name or kind")->capture_default_str();
    almost_cmd->add_option("--probe", o.probe, "Scalar probe name")->capture_default_str();
    almost_cmd->add_option("--th", o.th, "Positive threshold")->required();
    auto* dnear_cmd = add("dnear", "Descriptive nearness of two complexes", cmd_dnear, "SOURCE SOURCE");
    dnear_cmd->add_option("--probe", o.probe, "Probe name")->capture_default_str();
    auto* render_cmd = add("render", "Render a complex and its boundary region as SVG", cmd_render,
                           "SOURCE [COMPLEX]");
    render_cmd->add_option("--out", o.out_file, "Output file");
    auto* fixture_cmd = add("fixture", "Print the document of a built-in fixture", cmd_fixture, "NAME");
    fixture_cmd->add_option("--out", o.out_file, "Output file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? kExitOk : kExitUsage;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    Workspace ws;
    try {
        for (auto& [sub, handler] : commands) {
            if (sub->parsed()) result.exit_code = handler(ws, o, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        result.exit_code = exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        result.exit_code = kExitUsage;
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

} // namespace proxima::cli
