#include "proxima/fixed_sets.hpp"

#include "proxima/error.hpp"
#include "proxima/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace proxima {

MapKind parse_map_kind(std::string_view name) {
    if (name == "identity") return MapKind::Identity;
    if (name == "boundary_complement") return MapKind::BoundaryComplement;
    if (name == "table") return MapKind::Table;
    throw Error(ErrorCode::NotFound, "unknown map kind '" + std::string(name) + "'");
}

std::string_view to_string(MapKind kind) noexcept {
    switch (kind) {
    case MapKind::Identity: return "identity";
    case MapKind::BoundaryComplement: return "boundary_complement";
    case MapKind::Table: return "table";
    }
    return "identity";
}

CellComplex apply(const DpcMap& map, const CWSpace& space, const CellComplex& a) {
    switch (map.kind) {
    case MapKind::Identity: return a;
    case MapKind::BoundaryComplement: {
        CellComplex image = a;
        image.cells = set_difference(space.universe(), boundary_region(space, a.cells));
        return image;
    }
    case MapKind::Table: {
        auto it = map.table.find(a.name);
        if (it == map.table.end()) {
            if (a.name == kUniverseName) return a;
            throw Error(ErrorCode::NotTotal, "map " + map.name + " has no entry for '" + a.name + "'");
        }
        return space.complex(it->second);
    }
    }
    return a;
}

DpcResult is_dpc(const DpcMap& map, const CWSpace& space, const ProbeFunction& probe, DpcMode mode) {
    std::vector<CellComplex> domain;
    for (const auto& [name, c] : space.complexes()) domain.push_back(c);
    domain.push_back(space.complex(kUniverseName));
    std::vector<CellComplex> images;
    for (const CellComplex& c : domain) images.push_back(apply(map, space, c));

    DescriptionTable table(space, probe);
    DpcResult result;
    result.holds = mode == DpcMode::Universal;
    for (std::size_t i = 0; i < domain.size(); ++i) {
        for (std::size_t j = 0; j < domain.size(); ++j) {
            if (i == j || !dnear(table, domain[i].cells, table, domain[j].cells)) continue;
            bool kept = dnear(table, images[i].cells, table, images[j].cells);
            if (mode == DpcMode::Existential && kept) {
                return {true, std::pair{domain[i].name, domain[j].name}};
            }
            if (mode == DpcMode::Universal && !kept) {
                return {false, std::pair{domain[i].name, domain[j].name}};
            }
        }
    }
    return result;
}

bool descriptive_fixed(const DpcMap& map, const CWSpace& space, const CellComplex& a, const ProbeFunction& probe) {
    return same_description(describe(space, apply(map, space, a), probe), describe(space, a, probe));
}

AmiableResult amiable(const DpcMap& map, const CWSpace& space, const CellComplex& a, const ProbeFunction& probe) {
    CellComplex image = apply(map, space, a);
    DescriptionTable table(space, probe);
    auto common = descriptive_intersection(table, image.cells, table, a.cells, true);
    AmiableResult r;
    r.overlap = common.size();
    r.value = !common.empty();
    if (r.value) r.witness = common.front();
    return r;
}

AmiableResult amiable(const DpcMap& map, const CWSpace& sa, const CellComplex& a, const CWSpace& sb,
                      const CellComplex& b, const ProbeFunction& probe) {
    if (&sa == &sb) {
        CellComplex image = apply(map, sa, a);
        DescriptionTable table(sa, probe);
        auto common = descriptive_intersection(table, image.cells, table, b.cells, true);
        return {!common.empty(), common.empty() ? std::nullopt : std::optional{common.front()}, common.size()};
    }
    CellComplex image = apply(map, sa, a);
    DescriptionTable ta(sa, probe);
    DescriptionTable tb(sb, probe);
    auto common = descriptive_intersection(ta, image.cells, tb, b.cells, false);
    return {!common.empty(), common.empty() ? std::nullopt : std::optional{common.front()}, common.size()};
}

AlmostAmiableResult almost_amiable(const CWSpace& s1, const CellComplex& e1, const CWSpace& s2,
                                   const CellComplex& e2, const DpcMap& map, const ProbeFunction& probe, double th) {
    if (probe.arity() != 1) {
        throw Error(ErrorCode::ScalarRequired, "probe " + probe.name() + " has arity " + std::to_string(probe.arity()));
    }
    if (!(th > 0)) throw Error(ErrorCode::InvalidArgument, "threshold must be positive");
    AlmostAmiableResult r;
    r.first = describe(s1, apply(map, s1, e1), probe).values.front();
    r.second = describe(s2, apply(map, s2, e2), probe).values.front();
    r.difference = std::abs(r.first - r.second);
    r.value = r.difference <= th;
    return r;
}

FixedSetReport fixed_set_report(const DpcMap& map, const CWSpace& space, const CellComplex& a,
                                const ProbeFunction& probe) {
    FixedSetReport r;
    r.subject = a.name;
    r.dpc_existential = is_dpc(map, space, probe, DpcMode::Existential).holds;
    r.dpc_universal = is_dpc(map, space, probe, DpcMode::Universal).holds;
    r.descriptive_fixed = descriptive_fixed(map, space, a, probe);
    AmiableResult am = amiable(map, space, a, probe);
    r.amiable = am.value;
    r.witness = am.witness;
    return r;
}

bool jordan_partition_check(const CWSpace& space, const CellSet& cells) {
    CellSet cl = closure(space, cells);
    CellSet outside = boundary_region(space, cells);
    return set_intersection(cl, outside).empty() && set_union(cl, outside) == space.universe();
}

FixedComplexCheck fixed_cell_complex_check(const CWSpace& space, const DpcMap& map, const ProbeFunction& probe) {
    FixedComplexCheck check;
    DescriptionTable table(space, probe);
    for (const auto& [name, e] : space.complexes()) {
        std::set<CellSet> images, closed;
        for (const std::string& member : descriptive_closure(table, e.cells)) {
            CellComplex c = space.complex(member);
            images.insert(apply(map, space, c).cells);
            closed.insert(closure(space, c.cells));
        }
        if (images != closed) {
            check.value = false;
            check.failures.push_back(name);
        }
    }
    return check;
}

FixedComplexCheck ribbon_fixed_check(const CWSpace& space, std::string_view ribbon, const DpcMap& map,
                                     const ProbeFunction& probe) {
    CellComplex rb = space.complex(ribbon);
    CWSpace sub = restrict_space(space, closure(space, rb.cells));
    FixedComplexCheck check = fixed_cell_complex_check(sub, map, probe);
    if (!amiable(map, sub, sub.complex(ribbon), probe).value) {
        check.value = false;
        check.failures.push_back(std::string(ribbon));
    }
    return check;
}

BoundaryFixedResult shape_boundary_fixed_check(const CWSpace& space, const CellSet& cells,
                                               const ProbeFunction& probe) {
    CellSet region = boundary_region(space, cells);
    if (region.empty()) throw Error(ErrorCode::EmptyBoundary, "the complex covers the whole space");
    CellComplex b{"boundary", closure(space, region), {}};
    BoundaryFixedResult r;
    r.closed_up = b.cells != region;
    DpcMap f = DpcMap::boundary_complement();
    r.fixed = apply(f, space, b).cells == b.cells;
    r.amiable = amiable(f, space, b, probe).value;
    return r;
}

} // namespace proxima
