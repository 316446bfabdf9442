#pragma once

#include "proxima/proximity.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace proxima {

enum class MapKind { Identity, BoundaryComplement, Table };

struct DpcMap {
    std::string name;
    MapKind kind = MapKind::Identity;
    /// Complex name to complex name; the universe maps to itself unless listed.
    std::map<std::string, std::string> table;

    static DpcMap identity() { return {"identity", MapKind::Identity, {}}; }
    static DpcMap boundary_complement() { return {"boundary_complement", MapKind::BoundaryComplement, {}}; }
};

MapKind parse_map_kind(std::string_view name);
std::string_view to_string(MapKind kind) noexcept;

/// Image of a complex; generators are carried over.
CellComplex apply(const DpcMap& map, const CWSpace& space, const CellComplex& a);

enum class DpcMode { Existential, Universal };

struct DpcResult {
    bool holds = false;
    /// Near pair preserved (existential) or broken (universal).
    std::optional<std::pair<std::string, std::string>> witness;
};

/// Evaluated over distinct pairs of registered complexes and the universe.
DpcResult is_dpc(const DpcMap& map, const CWSpace& space, const ProbeFunction& probe, DpcMode mode);

bool descriptive_fixed(const DpcMap& map, const CWSpace& space, const CellComplex& a, const ProbeFunction& probe);

struct AmiableResult {
    bool value = false;
    std::optional<ElementRef> witness;
    std::size_t overlap = 0;
};

/// f(A) against A in the same space.
AmiableResult amiable(const DpcMap& map, const CWSpace& space, const CellComplex& a, const ProbeFunction& probe);
/// f(A) against B, where B may live in another space.
AmiableResult amiable(const DpcMap& map, const CWSpace& sa, const CellComplex& a, const CWSpace& sb,
                      const CellComplex& b, const ProbeFunction& probe);

struct AlmostAmiableResult {
    bool value = false;
    double first = 0;
    double second = 0;
    double difference = 0;
};

AlmostAmiableResult almost_amiable(const CWSpace& s1, const CellComplex& e1, const CWSpace& s2,
                                   const CellComplex& e2, const DpcMap& map, const ProbeFunction& probe, double th);

struct FixedSetReport {
    std::string subject;
    bool dpc_existential = false;
    bool dpc_universal = false;
    bool descriptive_fixed = false;
    bool amiable = false;
    std::optional<ElementRef> witness;
};

FixedSetReport fixed_set_report(const DpcMap& map, const CWSpace& space, const CellComplex& a,
                                const ProbeFunction& probe);

/// cl(A) and K \ cl(A) are disjoint and cover K.
bool jordan_partition_check(const CWSpace& space, const CellSet& cells);

struct FixedComplexCheck {
    bool value = true;
    /// Registered complexes whose descriptive closure is not mapped onto itself.
    std::vector<std::string> failures;
};

/// For each registered E: {f(C) : C in dcl(E)} equals {cl(C) : C in dcl(E)}.
FixedComplexCheck fixed_cell_complex_check(const CWSpace& space, const DpcMap& map, const ProbeFunction& probe);

/// The same check inside the subspace cl(ribbon), plus amiability of the ribbon.
FixedComplexCheck ribbon_fixed_check(const CWSpace& space, std::string_view ribbon, const DpcMap& map,
                                     const ProbeFunction& probe);

struct BoundaryFixedResult {
    bool fixed = false;
    bool amiable = false;
    /// Whether the boundary region needed closing (cl(B) != B).
    bool closed_up = false;
};

BoundaryFixedResult shape_boundary_fixed_check(const CWSpace& space, const CellSet& cells,
                                               const ProbeFunction& probe);

} // namespace proxima
